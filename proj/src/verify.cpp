#include "polygame/verify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polygame {

namespace {

std::string point_text_of(const std::vector<Rational>& point) {
    std::string s;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) s += " ";
        s += to_string(point[i]);
    }
    return s;
}

std::string point_text_of(const std::vector<double>& point) {
    std::string s;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) s += " ";
        s += format_double(point[i]);
    }
    return s;
}

}  // namespace

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    for (const Entry& e : entries) {
        os << "point ( " << e.point_text << " ) max_residual " << format_double(e.max_residual)
           << " interior " << (e.interior ? "yes" : "no") << " "
           << (e.pass ? "pass" : "fail");
        if (!e.note.empty()) os << " (" << e.note << ")";
        os << "\n";
    }
    os << "passed " << passed << "/" << entries.size() << "\n";
    return os.str();
}

VerificationReport check_points(const Game& game, const EncodingWitness& witness,
                                const std::vector<std::vector<Rational>>& points,
                                const Rational& tol) {
    if (tol != 0) throw std::invalid_argument("exact mode requires tol = 0");
    VerificationReport report;
    for (const auto& point : points) {
        VerificationReport::Entry entry;
        entry.point_text = point_text_of(point);
        try {
            MixedProfile profile = replay_witness(witness, point);
            ResidualReport rr = indifference_residuals(game, profile);
            entry.max_residual = to_double(rr.max_abs);
            entry.residual_zero = rr.max_abs == 0;
            entry.interior = rr.all_interior;
            entry.pass = entry.residual_zero && entry.interior;
        } catch (const ReplayError& e) {
            entry.note = e.what();
        }
        if (entry.pass) ++report.passed;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

VerificationReport check_points(const Game& game, const EncodingWitness& witness,
                                const std::vector<std::vector<double>>& points, double tol) {
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    VerificationReport report;
    for (const auto& point : points) {
        VerificationReport::Entry entry;
        entry.point_text = point_text_of(point);
        try {
            FloatProfile profile = replay_witness(witness, point);
            ResidualReportF rr = indifference_residuals(game, profile);
            entry.max_residual = rr.max_abs;
            entry.residual_zero = rr.max_abs == 0;
            entry.interior = rr.all_interior;
            entry.pass = rr.max_abs <= tol && entry.interior;
        } catch (const ReplayError& e) {
            entry.note = e.what();
        }
        if (entry.pass) ++report.passed;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<double> grid_completeness(const Game& game, const EncodingWitness& witness,
                                      int resolution, double tol) {
    if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
    if (witness.coord_dim != 1)
        throw std::invalid_argument("grid scan needs a witness with a single input coordinate");
    std::vector<double> passing;
    for (int i = 0; i < resolution; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(resolution - 1);
        try {
            FloatProfile profile = replay_witness(witness, std::vector<double>{t});
            ResidualReportF rr = indifference_residuals(game, profile);
            if (rr.all_interior && rr.max_abs <= tol) passing.push_back(t);
        } catch (const ReplayError&) {
            // boundary and off-box grid points simply do not pass
        }
    }
    return passing;
}

int count_clusters(const std::vector<double>& passing, double step, int radius_steps) {
    int clusters = 0;
    double last = 0.0;
    bool open = false;
    const double reach = step * static_cast<double>(radius_steps) * 1.0000001;
    for (double x : passing) {
        if (!open || x - last > reach) {
            ++clusters;
            open = true;
        }
        last = x;
    }
    return clusters;
}

}  // namespace polygame
