// Command-line front end: harmonic decomposition, invariant sets, genericity
// reports, orbit comparison of two stiffness tensors, input generation, and
// the built-in acceptance suite.
//
// Exit codes: 0 equivalent/success, 1 distinct, 2 self-check failure,
// 3 non-generic, 64 usage or parse failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "ela/json_io.hpp"
#include "ela/selfcheck.hpp"
#include "ela/separation.hpp"

namespace {

constexpr int kExitEquivalent = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitSelfcheckFailure = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kExitUsage = 64;

struct Options {
    double tol = 1e-7;
    double gen_threshold = 1e-8;
    std::uint64_t seed = 0;
    std::string set = "s21";
    std::string format = "json";
    bool recover = false;
};

ela::InvariantSet parse_set(const std::string& s) {
    if (s == "s21") return ela::InvariantSet::S21;
    if (s == "s19") return ela::InvariantSet::S19;
    if (s == "s18") return ela::InvariantSet::S18;
    throw CLI::ValidationError("--set must be one of s21|s19|s18");
}

void emit(const ela::Json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        // text: flat "key = value" lines
        std::function<void(const std::string&, const ela::Json&)> walk =
            [&](const std::string& prefix, const ela::Json& node) {
                if (node.is_object()) {
                    for (const auto& [k, v] : node.items())
                        walk(prefix.empty() ? k : prefix + "." + k, v);
                } else if (node.is_array() && !node.empty() && node[0].is_object() &&
                           node[0].contains("name")) {
                    for (const auto& v : node)
                        walk(prefix + "." + v.at("name").get<std::string>(), v.at("value"));
                } else {
                    std::cout << prefix << " = " << node.dump() << "\n";
                }
            };
        walk("", j);
    }
}

int cmd_decompose(const std::string& path, const Options& opt, bool roundtrip) {
    const ela::ElasticityTensor e = ela::read_elasticity_file(path);
    const ela::HarmonicDecomposition dec = ela::decompose(e);
    ela::Json out = ela::to_json(dec);
    if (roundtrip) {
        const ela::ElasticityTensor back = ela::reconstruct(dec);
        out["roundtrip_residual"] = (back - e).norm() / std::max(e.norm(), 1e-300);
        out["reconstructed"] = ela::voigt_json(back)["voigt"];
    }
    emit(out, opt.format);
    return kExitEquivalent;
}

int cmd_invariants(const std::string& path, const Options& opt) {
    const ela::ElasticityTensor e = ela::read_elasticity_file(path);
    const ela::InvariantSet set = parse_set(opt.set);
    try {
        ela::InvariantVector v;
        if (set == ela::InvariantSet::S21)
            v = ela::separating21(e);
        else if (set == ela::InvariantSet::S19)
            v = ela::separating19(e);
        else
            v = ela::separating18(e, opt.gen_threshold);
        ela::Json out;
        out["set"] = opt.set;
        out["invariants"] = ela::to_json(v);
        emit(out, opt.format);
        return kExitEquivalent;
    } catch (const ela::NonGenericError& err) {
        ela::Json out;
        out["error"] = "non_generic";
        out["genericity"] = ela::to_json(err.report);
        emit(out, opt.format);
        return kExitNonGeneric;
    }
}

int cmd_genericity(const std::string& path, const Options& opt) {
    const ela::ElasticityTensor e = ela::read_elasticity_file(path);
    const ela::GenericityReport rep = ela::genericity(ela::decompose(e).h, opt.gen_threshold);
    emit(ela::to_json(rep), opt.format);
    return rep.generic ? kExitEquivalent : kExitNonGeneric;
}

int cmd_compare(const std::string& path1, const std::string& path2, const Options& opt) {
    const ela::ElasticityTensor e1 = ela::read_elasticity_file(path1);
    const ela::ElasticityTensor e2 = ela::read_elasticity_file(path2);
    const ela::CompareResult res =
        ela::equivalent(e1, e2, opt.tol, opt.gen_threshold, parse_set(opt.set));
    ela::Json out = ela::to_json(res);
    if (opt.recover && res.decision == ela::Decision::Equivalent) {
        const auto g = ela::recover_rotation(e1, e2, opt.gen_threshold);
        if (g)
            out["rotation"] = ela::to_json(*g);
        else
            out["rotation"] = nullptr;
    }
    emit(out, opt.format);
    switch (res.decision) {
        case ela::Decision::Equivalent: return kExitEquivalent;
        case ela::Decision::Distinct: return kExitDistinct;
        case ela::Decision::NonGeneric: return kExitNonGeneric;
    }
    return kExitUsage;
}

int cmd_gen(const std::string& kind, const std::string& out_path, const std::string& copy_of,
            const Options& opt) {
    ela::Rng rng(opt.seed);
    ela::Json out;
    if (kind == "generic") {
        out = ela::voigt_json(ela::ElasticityTensor::random(rng));
    } else if (kind == "isotropic") {
        const double c1 = rng.normal();
        const double c2 = rng.normal();
        out = ela::voigt_json(ela::ElasticityTensor::isotropic(c1, c2));
        out["isotropic_c1"] = c1;
        out["isotropic_c2"] = c2;
    } else if (kind == "rotated-copy") {
        if (copy_of.empty()) throw CLI::ValidationError("--of FILE is required for rotated-copy");
        const ela::ElasticityTensor e = ela::read_elasticity_file(copy_of);
        const ela::Rotation g = ela::random_rotation(rng);
        out = ela::voigt_json(ela::rotate(g, e));
        out["rotation"] = ela::to_json(g);
    } else {
        throw CLI::ValidationError("kind must be generic|isotropic|rotated-copy");
    }
    out["kind"] = kind;
    out["seed"] = opt.seed;
    if (out_path.empty() || out_path == "-") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw ela::FormatError("cannot write " + out_path);
        f << out.dump(2) << "\n";
    }
    return kExitEquivalent;
}

int cmd_selfcheck(const Options& opt, const std::string& fault) {
    ela::SelfcheckConfig cfg;
    if (opt.seed != 0) cfg.seed = opt.seed;
    cfg.inject_fault = fault;
    const auto results = ela::run_selfcheck(cfg);
    bool all = true;
    std::string first_failure;
    for (const auto& r : results) {
        std::fprintf(stdout, "[%s] %-24s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                     r.detail.c_str(), r.seconds);
        if (!r.passed && all) first_failure = r.name;
        all = all && r.passed;
    }
    if (!all) std::fprintf(stderr, "selfcheck: failing check: %s\n", first_failure.c_str());
    return all ? kExitEquivalent : kExitSelfcheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elasticity-tensor invariants, harmonic decomposition and orbit comparison"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tol", opt.tol, "Comparison tolerance (degree-weighted relative)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--gen-threshold", opt.gen_threshold, "Genericity detector threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "PRNG seed")->capture_default_str();
    app.add_option("--set", opt.set, "Invariant set: s21|s19|s18")->capture_default_str();
    app.add_option("--format", opt.format, "Output format: json|text")->capture_default_str();

    std::string in1, in2, out_path, kind, copy_of, fault;
    bool roundtrip = false;

    auto* dec = app.add_subcommand("decompose", "Harmonic decomposition of a stiffness tensor");
    dec->add_option("input", in1, "Tensor file (json or 6x6 text)")->required();
    dec->add_flag("--roundtrip", roundtrip, "Also reconstruct and report the residual");

    auto* inv = app.add_subcommand("invariants", "Invariant vector of a stiffness tensor");
    inv->add_option("input", in1, "Tensor file")->required();

    auto* gen_cmd = app.add_subcommand("genericity", "Genericity report of a stiffness tensor");
    gen_cmd->add_option("input", in1, "Tensor file")->required();

    auto* cmp = app.add_subcommand("compare", "Decide whether two tensors are rotations of one another");
    cmp->add_option("input1", in1, "First tensor file")->required();
    cmp->add_option("input2", in2, "Second tensor file")->required();
    cmp->add_flag("--recover-rotation", opt.recover, "Attach the recovered rotation on equivalence");

    auto* gen = app.add_subcommand("gen", "Generate tensor files");
    gen->add_option("kind", kind, "generic|isotropic|rotated-copy")->required();
    gen->add_option("--of", copy_of, "Source file for rotated-copy");
    gen->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* chk = app.add_subcommand("selfcheck", "Run the acceptance suite");
    chk->add_option("--inject-fault", fault, "Corrupt a named check's inputs (test hook)");

    try {
        app.parse(argc, argv);
        if (opt.format != "json" && opt.format != "text")
            throw CLI::ValidationError("--format must be json|text");
        if (dec->parsed()) return cmd_decompose(in1, opt, roundtrip);
        if (inv->parsed()) return cmd_invariants(in1, opt);
        if (gen_cmd->parsed()) return cmd_genericity(in1, opt);
        if (cmp->parsed()) return cmd_compare(in1, in2, opt);
        if (gen->parsed()) return cmd_gen(kind, out_path, copy_of, opt);
        if (chk->parsed()) return cmd_selfcheck(opt, fault);
        return kExitUsage;
    } catch (const CLI::ParseError& err) {
        app.exit(err);  // prints message
        return kExitUsage;
    } catch (const ela::FormatError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const ela::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
}
