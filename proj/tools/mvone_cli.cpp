#include "mvone/certifier.hpp"
#include "mvone/errors.hpp"
#include "mvone/essentiality.hpp"
#include "mvone/json_io.hpp"
#include "mvone/selftest.hpp"
#include "mvone/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitNegative = 2;  // mathematically detected: MV != 1, MV = 0, non-generic

mvone::Json read_input(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream f;
    if (!path.empty()) {
        f.open(path);
        if (!f) throw std::runtime_error("cannot open input file: " + path);
        in = &f;
    }
    mvone::Json j;
    try {
        *in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

void write_output(const std::string& path, const mvone::Json& j) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << j.dump(2) << "\n";
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice polytope tuples of mixed volume 1: analysis, certification, solving"};
    app.require_subcommand(1);

    std::string input_path, output_path;
    std::uint64_t seed = 0;
    bool verbose = false;
    int simplex_dim = 0;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("--input", input_path, "input JSON file (default: stdin)");
        if (needs_input) (void)opt;
        cmd->add_option("--output", output_path, "output file (default: stdout)");
        cmd->add_flag("--verbose", verbose, "verbose progress output");
        cmd->add_option("--seed", seed, "seed for randomized checks");
    };

    auto* mv_cmd = app.add_subcommand("mv", "mixed volume of a tuple");
    add_io(mv_cmd, true);
    auto* ess_cmd = app.add_subcommand("essential", "essentiality and deficient-subtuple report");
    add_io(ess_cmd, true);
    auto* cert_cmd = app.add_subcommand("certify", "certify an essential tuple into a volume-1 simplex");
    add_io(cert_cmd, true);
    auto* dec_cmd = app.add_subcommand("decompose", "full decomposition of a mixed-volume-1 tuple");
    add_io(dec_cmd, true);
    auto* solve_cmd = app.add_subcommand("solve", "solve a mixed-volume-1 polynomial system");
    add_io(solve_cmd, true);
    auto* count_cmd = app.add_subcommand("count-simplices",
                                         "count volume-1 simplices containing the axis segments");
    count_cmd->add_option("n", simplex_dim, "ambient dimension (2..4)")->required();
    add_io(count_cmd, false);
    auto* self_cmd = app.add_subcommand("selftest", "run the seeded randomized property suites");
    add_io(self_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (mv_cmd->parsed()) {
            auto a = mvone::tuple_from_json(read_input(input_path));
            if (a.size() != a.dim) throw std::invalid_argument("tuple must have n polytopes in Z^n");
            mvone::Int v = mvone::mixed_volume(a);
            write_output(output_path, v.str() + "\n");
            return v == 0 ? kExitNegative : kExitOk;
        }
        if (ess_cmd->parsed()) {
            auto a = mvone::tuple_from_json(read_input(input_path));
            mvone::Json out{{"essential", mvone::is_essential(a)},
                            {"linearly_independent", mvone::is_linearly_independent(a)},
                            {"tuple_dim", mvone::tuple_dim(a)}};
            if (auto rep = mvone::minimal_deficient_subtuple(a)) {
                out["minimal_deficient_subtuple"] = mvone::Json{
                    {"indices", rep->indices}, {"sum_dim", rep->sum_dim}, {"deficiency", rep->deficiency}};
            }
            write_output(output_path, out);
            return kExitOk;
        }
        if (cert_cmd->parsed()) {
            auto a = mvone::tuple_from_json(read_input(input_path));
            auto c = mvone::certify_unit(a);
            write_output(output_path, mvone::certificate_to_json(c));
            return kExitOk;
        }
        if (dec_cmd->parsed()) {
            auto a = mvone::tuple_from_json(read_input(input_path));
            auto d = mvone::decompose_theorem1(a);
            write_output(output_path, mvone::decomposition_to_json(d));
            return kExitOk;
        }
        if (solve_cmd->parsed()) {
            auto s = mvone::system_from_json(read_input(input_path));
            auto [p, plan] = mvone::solve_unique(s);
            mvone::Json out = mvone::point_to_json(p);
            out["plan"] = mvone::plan_to_json(plan);
            write_output(output_path, out);
            return kExitOk;
        }
        if (count_cmd->parsed()) {
            auto count = mvone::count_unit_simplices_containing_axes(simplex_dim);
            std::int64_t formula = 1 << simplex_dim;
            for (int i = 0; i < simplex_dim - 2; ++i) formula *= simplex_dim + 1;
            std::ostringstream os;
            os << "enumerated " << count << ", formula " << formula << "\n";
            write_output(output_path, os.str());
            return count == formula ? kExitOk : kExitIo;
        }
        if (self_cmd->parsed()) {
            std::ostringstream os;
            const bool ok = mvone::run_selftest(seed, verbose, os);
            write_output(output_path, os.str());
            return ok ? kExitOk : kExitIo;
        }
    } catch (const mvone::ZeroMixedVolume& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const mvone::NotMixedVolumeOne& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const mvone::MixedVolumeExceedsOne& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const mvone::NotEssential& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const mvone::NoLift& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const mvone::SingularBlock& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const mvone::ZeroCoordinate& e) {
        std::cerr << e.what() << "\n";
        return kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
