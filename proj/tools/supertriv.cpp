#include "supertriv/endo.hpp"
#include "supertriv/serialize.hpp"
#include "supertriv/structure.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace st = supertriv;

namespace {

// Exit codes: 0 success, 1 usage error, 2 validation/mathematical failure,
// 3 internal error.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kInternal = 3;

st::Supermodule load_valid(const std::string& path) {
    st::Supermodule m = st::read_module(path);
    if (auto err = st::validate(m)) {
        const char* kind = err->kind == st::ValidationError::Kind::ParityImpure
                               ? "ParityImpure"
                               : err->kind == st::ValidationError::Kind::RelationFailed
                                     ? "RelationFailed"
                                     : "TorusNotDiagonalizable";
        throw std::invalid_argument(std::string(kind) + ": " + err->detail);
    }
    return m;
}

std::string algebra_str(const st::SuperAlgebra& a) {
    return st::family_name(a.family) + "(" + std::to_string(a.rank) + ")";
}

int cmd_validate(const std::string& path) {
    load_valid(path);
    std::cout << "OK\n";
    return kOk;
}

int cmd_info(const std::string& path) {
    const st::Supermodule m = load_valid(path);
    std::cout << "algebra: " << algebra_str(m.algebra) << "\n";
    std::cout << "dim: " << m.dim() << " (" << m.space.dim_even << "|"
              << m.space.dim_odd << ")\n";
    if (m.algebra.family == st::Family::Exterior) {
        std::cout << "rk: " << st::rk(m) << "\n";
        std::cout << "socle dim: " << st::socle_basis(m).cols() << "\n";
        std::cout << "projective: " << (st::is_projective(m) ? "yes" : "no") << "\n";
    } else if (m.algebra.family == st::Family::E ||
               m.algebra.family == st::Family::F) {
        std::cout << "weights:\n";
        for (const auto& wc : st::weight_decompose(m)) {
            std::cout << "  (";
            for (std::size_t i = 0; i < wc.weight.size(); ++i)
                std::cout << st::rat_str(wc.weight[i])
                          << (i + 1 < wc.weight.size() ? "," : "");
            std::cout << ") dim " << wc.piece.dim() << " (" << wc.piece.space.dim_even
                      << "|" << wc.piece.space.dim_odd << ")\n";
        }
    }
    return kOk;
}

std::vector<st::Rational> parse_vector(const std::string& s) {
    std::vector<st::Rational> v;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string tok =
            s.substr(start, comma == std::string::npos ? std::string::npos
                                                       : comma - start);
        v.push_back(st::rat_parse(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return v;
}

int cmd_op(const std::string& op, const std::vector<std::string>& paths,
           const std::vector<std::string>& vs, const std::string& out) {
    auto need = [&](std::size_t n) {
        if (paths.size() != n)
            throw CLI::ValidationError("op " + op + " takes " + std::to_string(n) +
                                       " module file(s)");
    };
    st::Supermodule result;
    if (op == "tensor" || op == "sum" || op == "outer" || op == "hom") {
        need(2);
        const st::Supermodule a = load_valid(paths[0]);
        const st::Supermodule b = load_valid(paths[1]);
        if (op == "tensor") result = st::tensor(a, b);
        else if (op == "sum") result = st::direct_sum(a, b);
        else if (op == "outer") result = st::outer_tensor(a, b);
        else result = st::hom_module(a, b);
    } else if (op == "dual" || op == "pi") {
        need(1);
        const st::Supermodule a = load_valid(paths[0]);
        result = op == "dual" ? st::dual(a) : st::parity_shift(a);
    } else if (op == "restrict") {
        need(1);
        if (vs.empty())
            throw CLI::ValidationError("op restrict requires at least one --vs vector");
        const st::Supermodule a = load_valid(paths[0]);
        std::vector<std::vector<st::Rational>> vecs;
        for (const auto& s : vs) vecs.push_back(parse_vector(s));
        result = st::restrict_module(a, vecs);
    } else {
        throw CLI::ValidationError("unknown op: " + op);
    }
    st::write_module(out, result);
    return kOk;
}

int cmd_syzygy(const std::string& path, long n, const std::string& out) {
    st::write_module(out, st::syzygy(load_valid(path), n));
    return kOk;
}

int cmd_strip(const std::string& path, const std::string& out) {
    const st::StripResult s = st::strip_projectives(load_valid(path));
    std::cout << "free multiplicity: " << s.proj_mult_even << " even, "
              << s.proj_mult_odd << " odd\n";
    std::cout << "core dim: " << s.core.dim() << " (" << s.core.space.dim_even << "|"
              << s.core.space.dim_odd << ")\n";
    if (!out.empty()) st::write_module(out, s.core);
    return kOk;
}

int cmd_classify(const std::string& path) {
    try {
        std::cout << st::tclass_str(st::classify(load_valid(path))) << "\n";
        return kOk;
    } catch (const st::NotEndotrivial&) {
        std::cout << "NOT_ENDOTRIVIAL\n";
        return kOk;
    }
}

int cmd_verify(int rank, int range, int samples, std::uint64_t seed,
               const std::string& suite, bool as_json) {
    auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
    std::vector<st::VerificationReport> reports;

    if (want("rank"))
        reports.push_back(rank <= 1 ? st::verify_rank1(range)
                                    : st::verify_rank_r(rank, range));
    if (want("restriction")) {
        const int r = std::max(rank, 3);
        const auto alg = st::exterior(r);
        const std::vector<st::Supermodule> ms = {
            st::syzygy(st::trivial_module(alg, 0), 2),
            st::syzygy(st::trivial_module(alg, 1), 1),
            st::trivial_module(alg, 1)};
        for (const auto& m : ms)
            reports.push_back(st::restriction_constancy(m, samples, seed));
    }
    if (want("rank-variety")) {
        const int r = std::max(rank, 2);
        const auto alg = st::exterior(r);
        reports.push_back(st::rank_variety_sample(st::lambda_regular(alg), samples, seed));
        reports.push_back(st::rank_variety_sample(
            st::syzygy(st::trivial_module(alg, 0), 1), samples, seed));
        reports.push_back(
            st::rank_variety_sample(st::trivial_module(alg, 0), samples, seed));
    }
    if (want("ext1")) {
        const int r = std::max(rank, 2);
        const auto alg = st::exterior(r);
        reports.push_back(st::verify_ext1(st::trivial_module(alg, 0)));
        reports.push_back(st::verify_ext1(st::syzygy(st::trivial_module(alg, 1), 1)));
    }
    if (want("even-dim")) {
        reports.push_back(
            st::verify_even_dim_nonprincipal(st::Family::F, 2, samples, seed));
        reports.push_back(
            st::verify_even_dim_nonprincipal(st::Family::E, 2, samples, seed));
    }
    if (reports.empty()) throw CLI::ValidationError("unknown suite: " + suite);

    std::stable_sort(reports.begin(), reports.end(),
                     [](const auto& a, const auto& b) { return a.suite < b.suite; });
    bool all = true;
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            arr.push_back(nlohmann::json::parse(r.json()));
            all = all && r.all_pass();
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.table() << "\n";
            all = all && r.all_pass();
        }
    }
    return all ? kOk : kInvalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic graded modules over detecting superalgebras"};
    app.require_subcommand(1);

    std::string path, out, op_name;
    std::vector<std::string> op_paths, vs;
    long syz_n = 0;
    int v_rank = 2, v_range = 4, v_samples = 10;
    std::uint64_t v_seed = 1;
    std::string v_suite = "all";
    bool v_json = false;

    auto* validate = app.add_subcommand("validate", "check a module file");
    validate->add_option("path", path)->required();

    auto* info = app.add_subcommand("info", "print structural invariants");
    info->add_option("path", path)->required();

    auto* op = app.add_subcommand("op", "apply a functor and write the result");
    op->add_option("name", op_name, "tensor|dual|hom|sum|outer|pi|restrict")->required();
    op->add_option("paths", op_paths, "input module file(s)");
    op->add_option("--vs", vs, "restriction vector, comma-separated rationals");
    op->add_option("-o,--out", out)->required();

    auto* syz = app.add_subcommand("syzygy", "write the stripped n-th syzygy");
    syz->add_option("path", path)->required();
    syz->add_option("-n", syz_n)->required();
    syz->add_option("-o,--out", out)->required();

    auto* strip = app.add_subcommand("strip", "strip projective summands");
    strip->add_option("path", path)->required();
    strip->add_option("-o,--out", out);

    auto* classify = app.add_subcommand("classify", "endotrivial class (n, parity)");
    classify->add_option("path", path)->required();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--rank", v_rank);
    verify->add_option("--range", v_range);
    verify->add_option("--samples", v_samples);
    verify->add_option("--seed", v_seed);
    verify->add_option("--suite", v_suite, "rank|restriction|rank-variety|ext1|even-dim|all");
    verify->add_flag("--json", v_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (const char* env = std::getenv("SUPERTRIV_SEED")) v_seed = std::strtoull(env, nullptr, 10);

    try {
        if (*validate) return cmd_validate(path);
        if (*info) return cmd_info(path);
        if (*op) return cmd_op(op_name, op_paths, vs, out);
        if (*syz) return cmd_syzygy(path, syz_n, out);
        if (*strip) return cmd_strip(path, out);
        if (*classify) return cmd_classify(path);
        if (*verify) return cmd_verify(v_rank, v_range, v_samples, v_seed, v_suite, v_json);
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const st::NonMonotone& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const st::NotEndotrivial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
