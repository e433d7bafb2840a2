// Command-line front end: compile polynomial systems into games, verify
// witness replays, isolate univariate roots, and compute local degrees.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polygame/capacity.hpp"
#include "polygame/encoders.hpp"
#include "polygame/normalize.hpp"
#include "polygame/parser.hpp"
#include "polygame/roots.hpp"
#include "polygame/verify.hpp"
#include "polygame/winding.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string stem_of(const std::string& path) {
    std::string stem = path;
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > stem.find_last_of('/'))
        stem = stem.substr(0, dot);
    return stem;
}

// One point per line, whitespace-separated values, '#' comments.
template <typename T, typename ParseFn>
std::vector<std::vector<T>> read_points(const std::string& path, ParseFn&& parse) {
    std::vector<std::vector<T>> points;
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<T> point;
        std::string tok;
        while (ls >> tok) point.push_back(parse(tok));
        if (!point.empty()) points.push_back(std::move(point));
    }
    return points;
}

std::vector<polygame::Rational> univariate_coeffs(const polygame::PolySystem& sys) {
    if (sys.n != 1 || sys.m() != 1)
        throw std::runtime_error("this operation needs a single univariate equation");
    const polygame::Polynomial& p = sys.polys[0];
    std::vector<polygame::Rational> coeffs(static_cast<std::size_t>(p.degree_in(0)) + 1,
                                           polygame::Rational(0));
    for (const auto& [mono, c] : p.terms) coeffs[static_cast<std::size_t>(mono.degree_of(0))] = c;
    return coeffs;
}

int cmd_info(const std::string& path) {
    const polygame::PolySystem sys = polygame::parse_system(read_file(path));
    const polygame::DegreeProfile profile = polygame::degree_profile(sys);
    std::cout << "n=" << profile.n << " m=" << profile.m << "\n";
    std::cout << "d_ij:\n";
    for (int j = 0; j < profile.m; ++j) {
        std::cout << "  eq " << (j + 1) << ":";
        for (int i = 0; i < profile.n; ++i)
            std::cout << " " << profile.d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        std::cout << "\n";
    }
    std::cout << "d_i:";
    for (int di : profile.d_i) std::cout << " " << di;
    std::cout << "\n";
    std::cout << "d=" << profile.d_max << "\n";
    const polygame::ThreePlayerCapacity cap3 = polygame::capacity_3p(profile);
    const polygame::BinaryCapacity capn = polygame::capacity_np(profile);
    std::cout << "D=" << cap3.D << " D'=" << capn.Dprime << " 3p:(" << cap3.formats[0] << ","
              << cap3.formats[1] << "," << cap3.formats[2] << ") np:" << capn.players
              << " players";
    if (sys.n == 1 && sys.m() == 1) {
        const int d = profile.d_max;
        const int e = (d + 1) / 2;
        std::cout << " 1d:(2," << (e + 1) << "," << (e + 1) << ")";
    }
    std::cout << "\n";
    return kExitPass;
}

int cmd_encode(const std::string& path, const std::string& method, bool normalize,
               bool reduce_players, std::string out_base, const std::string& check_path) {
    polygame::PolySystem sys = polygame::parse_system(read_file(path));
    if (out_base.empty()) out_base = stem_of(path);
    if (normalize) {
        polygame::NormalizedSystem norm = polygame::normalize_to_box(sys);
        sys = norm.system;
        std::ostringstream os;
        os << "vars:";
        for (int i = 0; i < sys.n; ++i) os << " x" << (i + 1);
        os << "\n";
        for (const polygame::Polynomial& p : sys.polys) os << "eq: " << p.to_string() << " = 0\n";
        write_file(out_base + ".normalized", os.str());
    }

    polygame::Game game;
    polygame::EncodingWitness witness;
    if (method == "3p") {
        polygame::ThreePlayerEncoding enc = polygame::encode_three_player(sys);
        game = std::move(enc.game);
        witness = std::move(enc.witness);
    } else if (method == "np") {
        polygame::BinaryEncoding enc = polygame::encode_binary(sys, reduce_players);
        game = std::move(enc.game);
        witness = std::move(enc.witness);
    } else if (method == "1d") {
        polygame::UnivariateEncoding enc = polygame::encode_univariate(univariate_coeffs(sys));
        game = std::move(enc.game);
        witness = std::move(enc.witness);
    } else {
        throw std::runtime_error("unsupported method '" + method + "' (use 3p, np, or 1d)");
    }

    if (!check_path.empty()) {
        auto points = read_points<polygame::Rational>(
            check_path, [](const std::string& t) { return polygame::parse_rational(t); });
        for (const auto& point : points) {
            if (static_cast<int>(point.size()) != sys.n)
                throw std::runtime_error("check point has wrong dimension");
            polygame::Rational sum(0);
            for (const polygame::Rational& x : point) {
                if (!(x > 0 && x < 1)) {
                    std::cerr << "check point violates the open-box hypothesis\n";
                    return kExitCheckFailed;
                }
                sum += x;
            }
            if (witness.sum_constrained && !(sum < 1)) {
                std::cerr << "check point violates the open-box hypothesis (sum >= 1)\n";
                return kExitCheckFailed;
            }
            for (const polygame::Polynomial& p : sys.polys)
                if (p.eval(point) != 0) {
                    std::cerr << "check point does not satisfy the system\n";
                    return kExitCheckFailed;
                }
        }
    }

    write_file(out_base + ".game", polygame::serialize_game(game));
    write_file(out_base + ".witness", polygame::serialize_witness(witness));
    std::cout << "wrote " << out_base << ".game and " << out_base << ".witness\n";
    return kExitPass;
}

int cmd_verify(const std::string& game_path, const std::string& witness_path,
               const std::string& points_path, bool float_mode, double tol, int grid) {
    const polygame::Game game = polygame::deserialize_game(read_file(game_path));
    const polygame::EncodingWitness witness =
        polygame::deserialize_witness(read_file(witness_path));
    if (grid > 0) {
        std::vector<double> passing = polygame::grid_completeness(game, witness, grid, tol);
        for (double x : passing) std::cout << polygame::format_double(x) << "\n";
        std::cout << "passing " << passing.size() << " of " << grid << " grid points\n";
        return kExitPass;
    }
    if (points_path.empty()) throw std::runtime_error("verify needs --points or --grid");
    polygame::VerificationReport report;
    if (float_mode) {
        auto points = read_points<double>(points_path,
                                          [](const std::string& t) { return std::stod(t); });
        report = polygame::check_points(game, witness, points, tol);
    } else {
        auto points = read_points<polygame::Rational>(
            points_path, [](const std::string& t) { return polygame::parse_rational(t); });
        report = polygame::check_points(game, witness, points, polygame::Rational(0));
    }
    std::cout << report.to_text();
    return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int cmd_roots(const std::string& path, const std::vector<std::string>& coeff_args) {
    std::vector<polygame::Rational> coeffs;
    if (!coeff_args.empty()) {
        for (const std::string& t : coeff_args) coeffs.push_back(polygame::parse_rational(t));
    } else {
        coeffs = univariate_coeffs(polygame::parse_system(read_file(path)));
    }
    const polygame::RootList roots = polygame::roots_in_unit_interval(coeffs);
    for (const auto& root : roots.roots)
        std::cout << "root in (" << polygame::to_string(root.isolating.lo) << ", "
                  << polygame::to_string(root.isolating.hi) << ") ~ "
                  << polygame::format_double(root.approx) << "\n";
    std::cout << "roots " << roots.count() << "\n";
    return kExitPass;
}

int cmd_degree(const std::string& fx_text, const std::string& fy_text, double cx, double cy,
               double radius, int samples) {
    const polygame::Polynomial fx = polygame::parse_poly_expr(fx_text, 2);
    const polygame::Polynomial fy = polygame::parse_poly_expr(fy_text, 2);
    std::cout << polygame::local_degree(fx, fy, cx, cy, radius, samples) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial systems compiled into games with matching equilibria"};
    app.require_subcommand(1);

    std::string system_path, out_base, method = "3p", check_path;
    std::string game_path, witness_path, points_path;
    bool normalize = false, reduce_players = false, float_mode = false;
    double tol = 1e-9, radius = 0.5;
    std::vector<double> center{0.0, 0.0};
    int grid = 0, samples = 256;
    std::vector<std::string> coeff_args;
    std::string fx_text, fy_text;

    CLI::App* info = app.add_subcommand("info", "report formats and capacities of a system");
    info->add_option("system", system_path, "system file")->required();

    CLI::App* encode = app.add_subcommand("encode", "compile a system into a game and witness");
    encode->add_option("system", system_path, "system file")->required();
    encode->add_option("--method", method, "3p, np, or 1d")->required();
    encode->add_flag("--normalize", normalize, "apply the box change of variables first");
    encode->add_flag("--reduce-players", reduce_players, "trim the binary game to D'+m players");
    encode->add_option("--out", out_base, "output base path");
    encode->add_option("--check", check_path, "points that must lie on the variety and in the box");

    CLI::App* verify = app.add_subcommand("verify", "check witness replays against a game");
    verify->add_option("game", game_path, "game file")->required();
    verify->add_option("witness", witness_path, "witness file")->required();
    verify->add_option("--points", points_path, "points file");
    verify->add_flag("--float", float_mode, "float replay with tolerance");
    verify->add_option("--tol", tol, "float-mode residual tolerance");
    verify->add_option("--grid", grid, "scan a grid of this many points instead");

    CLI::App* roots = app.add_subcommand("roots", "isolate real roots in (0,1)");
    roots->add_option("system", system_path, "univariate system file");
    roots->add_option("--coeffs", coeff_args, "coefficients a0 a1 ... ad");

    CLI::App* degree = app.add_subcommand("degree", "local degree of a planar map");
    degree->add_option("--fx", fx_text, "first component, in x1 and x2")->required();
    degree->add_option("--fy", fy_text, "second component, in x1 and x2")->required();
    degree->add_option("--center", center, "center coordinates")->expected(2);
    degree->add_option("--radius", radius, "circle radius");
    degree->add_option("--samples", samples, "initial sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (info->parsed()) return cmd_info(system_path);
        if (encode->parsed())
            return cmd_encode(system_path, method, normalize, reduce_players, out_base, check_path);
        if (verify->parsed())
            return cmd_verify(game_path, witness_path, points_path, float_mode, tol, grid);
        if (roots->parsed()) {
            if (system_path.empty() && coeff_args.empty())
                throw std::runtime_error("roots needs a system file or --coeffs");
            return cmd_roots(system_path, coeff_args);
        }
        if (degree->parsed())
            return cmd_degree(fx_text, fy_text, center[0], center[1], radius, samples);
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        // winding and replay failures are check failures, not input errors
        const std::string what = e.what();
        if (what.find("cannot open") != std::string::npos ||
            what.find("line") != std::string::npos || what.find("unsupported") != std::string::npos ||
            what.find("needs") != std::string::npos)
            return kExitBadInput;
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
