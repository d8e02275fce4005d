#include "skewcm/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skewcm/io.hpp"

namespace skewcm::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

struct InputSpec {
    std::string path;
    std::string inline_text;
    std::string format = "signs-text";
    std::string permutation;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
    auto* path = cmd->add_option("--input", in.path, "input file path");
    auto* inl = cmd->add_option("--inline", in.inline_text, "input given inline");
    path->excludes(inl);
    cmd->add_option("--format", in.format, "signs-text|signs-json|graph-text|graph-json")
        ->check(CLI::IsMember({"signs-text", "signs-json", "graph-text", "graph-json"}));
    cmd->add_option("--permutation", in.permutation, "relabeling, e.g. \"3,1,2,4\"");
}

std::vector<int> parse_permutation(const std::string& s) {
    std::vector<int> perm;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            perm.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw io::ParseError("bad permutation entry '" + tok + "'");
        }
    }
    return perm;
}

SignMatrix load_signs(const InputSpec& in) {
    if (in.path.empty() == in.inline_text.empty())
        throw io::ParseError("exactly one of --input and --inline is required");

    std::string text = in.inline_text;
    if (!in.path.empty()) {
        std::ifstream f(in.path);
        if (!f) throw io::ParseError("cannot open " + in.path);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }

    SignMatrix eps = [&] {
        std::istringstream is(text);
        if (in.format == "signs-text") return io::parse_signs_text(is);
        if (in.format == "graph-text") return signs_from_graph(io::parse_graph_text(is));
        io::json j;
        try {
            j = io::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw io::ParseError(std::string("bad json: ") + e.what());
        }
        if (in.format == "signs-json") return io::parse_signs_json(j);
        return signs_from_graph(io::parse_graph_json(j));
    }();

    if (!in.permutation.empty()) eps = permuted(eps, parse_permutation(in.permutation));
    return eps;
}

Variant parse_variant(const std::string& s) {
    if (s == "a1") return Variant::A1;
    if (s == "a-infinity") return Variant::AInfinity;
    throw io::ParseError("unknown variant '" + s + "'");
}

struct NRange {
    int lo = 0;
    int hi = 0;
};

NRange parse_n_range(const std::string& s) {
    NRange r;
    const auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, colon));
            r.hi = std::stoi(s.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw io::ParseError("bad n range '" + s + "'");
    }
    if (r.lo < 1 || r.hi < r.lo) throw io::ParseError("bad n range '" + s + "'");
    return r;
}

void emit(std::ostream& out, const io::json& j, const std::string& text, const std::string& mode) {
    if (mode == "json") out << j.dump(2) << "\n";
    else out << text;
}

int cmd_classify(const InputSpec& in, const std::string& variant_str, const std::string& output,
                 bool unicode, std::ostream& out) {
    const Variant variant = parse_variant(variant_str);
    const SignMatrix eps = load_signs(in);
    if (variant == Variant::AInfinity && eps.size() < 2)
        throw io::ParseError("the a-infinity variant needs n >= 2");
    const Classification c = variant == Variant::A1 ? classify_a1(eps) : classify_a_infinity(eps);
    emit(out, io::to_json(c, unicode), io::render_text(c, unicode), output);
    return kExitOk;
}

int cmd_reduce(const InputSpec& in, const std::string& variant_str, bool replay,
               const std::string& output, std::ostream& out, std::ostream& err) {
    if (parse_variant(variant_str) != Variant::AInfinity)
        throw io::ParseError("reduce applies to the a-infinity variant only");
    const SignMatrix eps = load_signs(in);
    if (eps.size() < 2) throw io::ParseError("reduce needs n >= 2");
    const ReductionReport rep = full_reduction(eps);
    if (replay) {
        const auto failures = replay_trace(rep.original, rep.trace);
        if (!failures.empty()) {
            for (const auto& f : failures) err << "replay: " << f << "\n";
            return kExitInternal;
        }
    }
    emit(out, io::to_json(rep), io::render_text(rep), output);
    return kExitOk;
}

int cmd_oracle(const InputSpec& in, const std::string& variant_str, const std::string& output,
               std::ostream& out) {
    const Variant variant = parse_variant(variant_str);
    const SignMatrix eps = load_signs(in);
    if (eps.size() < 2) throw io::ParseError("oracle needs n >= 2");
    const Classification c = variant == Variant::A1 ? classify_a1(eps) : classify_a_infinity(eps);
    const OracleReport rep = verify_against_classification(eps, c);
    emit(out, io::to_json(rep), io::render_text(rep), output);
    return rep.consistent ? kExitOk : kExitMismatch;
}

int cmd_verify_single(const InputSpec& in, Variant variant, const std::string& output,
                      std::ostream& out) {
    const SignMatrix eps = load_signs(in);
    if (eps.size() < 2) throw io::ParseError("verify needs n >= 2");
    const AgreementReport rep = agreement_check(eps, variant, true);
    emit(out, io::to_json(rep, eps.size(), variant), io::render_text(rep, eps.size(), variant), output);
    return rep.agree ? kExitOk : kExitMismatch;
}

int run_sweep(SweepOptions opt, const std::string& output, std::ostream& out) {
    const SweepCounts counts = opt.workers == 1 ? sweep_serial(opt) : sweep_parallel(opt);
    emit(out, io::sweep_to_json(counts, opt), io::render_sweep_text(counts, opt), output);
    return counts.passed == counts.total ? kExitOk : kExitMismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"classification of stable categories over skew hypersurface singularities"};
    app.name("skewcm");
    app.require_subcommand(1);
    app.fallthrough(); // --variant / --output / --unicode may follow the subcommand

    std::string variant = "a-infinity";
    std::string output = "json";
    bool unicode = false;
    app.add_option("--variant", variant, "a1|a-infinity")->check(CLI::IsMember({"a1", "a-infinity"}));
    app.add_option("--output", output, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--unicode", unicode, "Greek letters in category strings");

    InputSpec cls_in, red_in, orc_in, ver_in;
    auto* classify = app.add_subcommand("classify", "classify one input");
    add_input_options(classify, cls_in);

    auto* reduce = app.add_subcommand("reduce", "emit the switching trace to normal form");
    add_input_options(reduce, red_in);
    bool replay = false;
    reduce->add_flag("--replay", replay, "re-verify the trace before printing");

    auto* oracle = app.add_subcommand("oracle", "finite-dimensional algebra cross-check");
    add_input_options(oracle, orc_in);

    auto* verify = app.add_subcommand("verify", "run all routes and compare");
    add_input_options(verify, ver_in);
    std::string ver_n;
    bool ver_exhaustive = false, ver_force = false;
    std::uint64_t ver_samples = 0, ver_seed = 0;
    int ver_workers = 0;
    verify->add_option("--n", ver_n, "matrix size for sweep mode");
    verify->add_flag("--exhaustive", ver_exhaustive, "all sign matrices of size n");
    verify->add_option("--samples", ver_samples, "random sample count");
    verify->add_option("--seed", ver_seed, "random seed");
    verify->add_flag("--force", ver_force, "allow exhaustive n > 8");
    verify->add_option("--workers", ver_workers, "worker count (1 = serial reference)");

    auto* enumerate = app.add_subcommand("enumerate", "tally verdicts over a range of sizes");
    std::string enum_n = "4";
    bool enum_exhaustive = false, enum_force = false, enum_verify = false;
    std::uint64_t enum_samples = 0, enum_seed = 0;
    int enum_workers = 0;
    enumerate->add_option("--n", enum_n, "size or range, e.g. 4 or 2:6");
    enumerate->add_flag("--exhaustive", enum_exhaustive, "all sign matrices per size");
    enumerate->add_option("--samples", enum_samples, "random sample count per size");
    enumerate->add_option("--seed", enum_seed, "random seed");
    enumerate->add_flag("--force", enum_force, "allow exhaustive n > 8");
    enumerate->add_flag("--verify", enum_verify, "also cross-check every input");
    enumerate->add_option("--workers", enum_workers, "worker count (1 = serial reference)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "skewcm: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (classify->parsed()) return cmd_classify(cls_in, variant, output, unicode, out);
        if (reduce->parsed()) return cmd_reduce(red_in, variant, replay, output, out, err);
        if (oracle->parsed()) return cmd_oracle(orc_in, variant, output, out);

        if (verify->parsed()) {
            if (!ver_in.path.empty() || !ver_in.inline_text.empty())
                return cmd_verify_single(ver_in, parse_variant(variant), output, out);
            if (ver_n.empty()) throw io::ParseError("verify needs --input, --inline, or --n");
            const NRange range = parse_n_range(ver_n);
            if (range.lo != range.hi) throw io::ParseError("verify runs one size at a time");
            SweepOptions opt;
            opt.n = range.lo;
            opt.variant = parse_variant(variant);
            opt.exhaustive = ver_exhaustive;
            opt.samples = ver_samples;
            opt.seed = ver_seed;
            opt.workers = ver_workers;
            if (opt.n < 2) throw io::ParseError("verify needs n >= 2");
            if (!opt.exhaustive && opt.samples == 0)
                throw io::ParseError("verify sweep needs --exhaustive or --samples N");
            if (opt.exhaustive && opt.n > 8 && !ver_force)
                throw io::ParseError("exhaustive verify beyond n = 8 needs --force");
            return run_sweep(opt, output, out);
        }

        if (enumerate->parsed()) {
            const NRange range = parse_n_range(enum_n);
            if (!enum_exhaustive && enum_samples == 0)
                throw io::ParseError("enumerate needs --exhaustive or --samples N");
            if (enum_exhaustive && range.hi > 8 && !enum_force)
                throw io::ParseError("exhaustive enumeration beyond n = 8 needs --force");
            const Variant var = parse_variant(variant);
            if (var == Variant::AInfinity && range.lo < 2)
                throw io::ParseError("the a-infinity variant needs n >= 2");

            io::json results = io::json::array();
            std::string text;
            int exit_code = kExitOk;
            for (int n = range.lo; n <= range.hi; ++n) {
                SweepOptions opt;
                opt.n = n;
                opt.variant = var;
                opt.exhaustive = enum_exhaustive;
                opt.samples = enum_samples;
                opt.seed = enum_seed;
                opt.workers = enum_workers;
                opt.classify_only = !enum_verify;
                const SweepCounts counts = opt.workers == 1 ? sweep_serial(opt) : sweep_parallel(opt);
                results.push_back(io::sweep_to_json(counts, opt));
                text += io::render_sweep_text(counts, opt);
                if (counts.passed != counts.total) exit_code = kExitMismatch;
            }
            io::json j;
            j["results"] = std::move(results);
            emit(out, j, text, output);
            return exit_code;
        }
    } catch (const io::ParseError& e) {
        err << "skewcm: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const ValidationError& e) {
        err << "skewcm: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "skewcm: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "skewcm: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::logic_error& e) {
        err << "skewcm: internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInvalidInput;
}

} // namespace skewcm::cli
