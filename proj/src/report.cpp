#include "screenlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace screenlab {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

void sweep_fields(std::ostream& out, const SweepRow& r) {
    out << fmt(r.rho) << ',' << fmt(r.sigma) << ',' << (r.exists ? 1 : 0);
    if (!r.exists) {
        out << ",,,,,,,,";
        return;
    }
    const auto& w = r.welfare;
    out << ',' << fmt(r.eq.theta_hat) << ',' << fmt(r.eq.tau.value()) << ',' << fmt(r.eq.tau_hat.value()) << ','
        << fmt(w.V) << ',' << fmt(w.AR) << ',' << fmt(w.U) << ',' << fmt(w.alpha) << ',' << fmt(w.beta);
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& s) {
    out << kSweepHeader << '\n';
    for (const auto& r : s.rows) {
        sweep_fields(out, r);
        out << '\n';
    }
}

void write_commit_sweep_csv(std::ostream& out, const SweepResult& s,
                            const std::vector<std::optional<CommitmentSolution>>& commit) {
    if (commit.size() != s.rows.size()) throw std::invalid_argument("commit-sweep: size mismatch");
    out << kSweepHeader << ",tau_hat_star,theta_hat_star,Vbar\n";
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        sweep_fields(out, s.rows[i]);
        if (commit[i])
            out << ',' << fmt(commit[i]->tau_hat_star) << ',' << fmt(commit[i]->theta_hat_star) << ','
                << fmt(commit[i]->Vbar);
        else
            out << ",,,";
        out << '\n';
    }
}

void write_sweep_svg(std::ostream& out, const SweepResult& s, const std::string& title) {
    const double W = 640, H = 200, left = 70, right = 20, top = 30, gap = 40;
    struct Series {
        const char* name;
        double WelfareReport::*field;
        const char* colour;
    };
    const Series series[] = {{"V", &WelfareReport::V, "#1f77b4"},
                             {"AR", &WelfareReport::AR, "#d62728"},
                             {"U", &WelfareReport::U, "#2ca02c"}};
    std::vector<const SweepRow*> rows;
    for (const auto& r : s.rows)
        if (r.exists) rows.push_back(&r);
    const double total = top + 3 * (H + gap);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << total << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << title << "</text>\n";
    if (rows.empty()) {
        out << "</svg>\n";
        return;
    }
    const double x0 = std::log10(rows.front()->rho), x1 = std::log10(rows.back()->rho);
    char buf[64];
    for (int k = 0; k < 3; ++k) {
        const auto& se = series[k];
        double y0 = 1e300, y1 = -1e300;
        for (auto* r : rows) {
            y0 = std::min(y0, r->welfare.*se.field);
            y1 = std::max(y1, r->welfare.*se.field);
        }
        if (y1 - y0 < 1e-12) {
            y0 -= 0.5e-12;
            y1 += 0.5e-12;
        }
        const double oy = top + k * (H + gap);
        const double pw = W - left - right;
        auto px = [&](double x) { return left + (x1 > x0 ? (x - x0) / (x1 - x0) : 0.5) * pw; };
        auto py = [&](double y) { return oy + H - (y - y0) / (y1 - y0) * H; };
        out << "<rect x=\"" << left << "\" y=\"" << oy << "\" width=\"" << pw << "\" height=\"" << H
            << "\" fill=\"none\" stroke=\"#888\"/>\n";
        std::snprintf(buf, sizeof buf, "%.4g", y1);
        out << "<text x=\"" << left - 4 << "\" y=\"" << oy + 10
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << buf << "</text>\n";
        std::snprintf(buf, sizeof buf, "%.4g", y0);
        out << "<text x=\"" << left - 4 << "\" y=\"" << oy + H
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << buf << "</text>\n";
        out << "<text x=\"" << left + 6 << "\" y=\"" << oy + 14 << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << se.colour << "\">" << se.name << "</text>\n";
        std::snprintf(buf, sizeof buf, "%.3g", rows.front()->rho);
        out << "<text x=\"" << left << "\" y=\"" << oy + H + 14
            << "\" font-family=\"sans-serif\" font-size=\"10\">rho=" << buf << "</text>\n";
        std::snprintf(buf, sizeof buf, "%.3g", rows.back()->rho);
        out << "<text x=\"" << left + pw << "\" y=\"" << oy + H + 14
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">rho=" << buf << " (log)</text>\n";
        out << "<polyline fill=\"none\" stroke=\"" << se.colour << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f", px(std::log10(rows[i]->rho)), py(rows[i]->welfare.*se.field));
            out << (i ? " " : "") << buf;
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << contents;
    if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace screenlab
