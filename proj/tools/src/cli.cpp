// Copyright 2026 The maskquorum Authors. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

#include "maskquorum/cli.hpp"

#include "maskquorum/analysis.hpp"
#include "maskquorum/availability.hpp"
#include "maskquorum/composition.hpp"
#include "maskquorum/constructions.hpp"
#include "maskquorum/errors.hpp"
#include "maskquorum/spec_json.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace maskquorum::cli
{

using nlohmann::json;

namespace
{

constexpr std::uint64_t kDefaultMaterializeCap = 10'000;
constexpr std::uint64_t kOracleLiveSamples = 1'000;
constexpr std::size_t kTable8Universe = 1024;
constexpr double kTable8DefaultP = 0.125;
constexpr double kTable8PPrime = 1.0 / 7.0;

std::string
sig6(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// A JSON number carrying 6 significant digits.
json
prob(double x)
{
    return std::stod(sig6(x));
}

ConstructionSpec
loadSpec(std::string const& arg)
{
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{')
    {
        return parseSpec(arg);
    }
    std::ifstream in(arg);
    if (!in)
    {
        throw ParameterError("cannot read spec file '" + arg + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parseSpec(buf.str());
}

bool
containsMPath(ConstructionSpec const& spec)
{
    if (std::holds_alternative<MPathSpec>(spec.value))
    {
        return true;
    }
    if (auto const* c = std::get_if<ComposedSpec>(&spec.value))
    {
        return containsMPath(*c->outer) || containsMPath(*c->inner);
    }
    return false;
}

unsigned
threadsFromEnv()
{
    char const* raw = std::getenv("MASKQUORUM_THREADS");
    if (raw == nullptr || *raw == '\0')
    {
        return 0;
    }
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096)
    {
        throw ParameterError("MASKQUORUM_THREADS must be a positive integer");
    }
    return static_cast<unsigned>(v);
}

json
boundJson(Bound const& b)
{
    return {{"value", prob(b.value)}, {"vacuous", b.vacuous}};
}

json
estimateJson(EstimateResult const& r)
{
    json j = {{"value", prob(r.value)}};
    if (r.kind == EstimateResult::Kind::Exact)
    {
        j["kind"] = "exact";
    }
    else
    {
        j["kind"] = "monte_carlo";
        j["trials"] = r.trials;
        j["std_error"] = prob(r.stdError);
        j["seed"] = r.seed;
    }
    return j;
}

json
boundsJson(QuorumSystemHandle const& handle, double p, double pPrime)
{
    auto const& params = handle.params();
    json out;
    auto lower = fpLowerBounds(params, p);
    out["lower"] = {{"transversal", prob(lower.transversal)},
                    {"quorum_minus", prob(lower.quorumMinus)}};
    if (lower.masking)
    {
        out["lower"]["masking"] = prob(*lower.masking);
    }
    else
    {
        out["lower"]["masking"] = "not-applicable";
    }

    json specific = json::object();
    std::visit(
        [&](auto const& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MGridSpec>)
            {
                specific["mgrid_fp_lower"] = prob(mgridFpLower(s.side, p));
            }
            else if constexpr (std::is_same_v<T, ThresholdSpec>)
            {
                specific["threshold_exact"] = prob(thresholdG(s.k, s.ell, p).exact);
            }
            else if constexpr (std::is_same_v<T, RTSpec>)
            {
                specific["rt_fp_recurrence"] =
                    prob(rtFpRecurrence(s.k, s.ell, s.h, p));
                specific["rt_fp_upper"] = boundJson(rtFpUpper(s.k, s.ell, s.h, p));
            }
            else if constexpr (std::is_same_v<T, BoostFPPSpec>)
            {
                if (p < 0.25)
                {
                    auto b = boostFppFpUpper(s.q, s.b, p);
                    specific["boostfpp_fp_upper"] = boundJson(b.roundedForm);
                    specific["boostfpp_fp_upper_chernoff"] =
                        boundJson(b.chernoffForm);
                }
                else
                {
                    specific["boostfpp_fp_upper"] = "not-applicable: p >= 1/4";
                }
            }
            else if constexpr (std::is_same_v<T, MPathSpec>)
            {
                if (p < pPrime && pPrime < 1.0 / 3.0)
                {
                    specific["mpath_fp_upper"] =
                        boundJson(mpathFpUpper(s.side, s.b, p, pPrime));
                    specific["p_prime"] = prob(pPrime);
                }
                else
                {
                    specific["mpath_fp_upper"] =
                        "not-applicable: needs p < p' < 1/3";
                }
            }
        },
        handle.spec().value);
    if (!specific.empty())
    {
        out["construction"] = specific;
    }
    return out;
}

int
cmdParams(std::string const& specArg, std::ostream& out)
{
    auto handle = build(loadSpec(specArg));
    out << paramsToJson(handle.params()).dump(2) << "\n";
    return kOk;
}

int
cmdLoad(std::string const& specArg, std::uint64_t cap, std::ostream& out)
{
    auto handle = build(loadSpec(specArg));
    json j = {{"system", describe(handle.spec())},
              {"analytic_load", handle.params().load}};
    if (handle.quorumCount() <= cap)
    {
        auto sys = handle.materialize(cap);
        auto lp = loadLp(sys);
        j["method"] = containsMPath(handle.spec()) ? "lp-straight-paths" : "lp";
        j["load"] = lp.load;
        j["quorums"] = sys.quorumCount();
    }
    else
    {
        j["method"] = "analytic";
        j["load"] = handle.params().load;
        j["quorums"] = handle.quorumCount();
    }
    out << j.dump(2) << "\n";
    return kOk;
}

struct FpOptions
{
    std::string spec;
    double p{0.0};
    bool exact{false};
    bool mc{false};
    std::uint64_t trials{100'000};
    std::uint64_t seed{1};
    bool bounds{false};
    std::optional<double> pPrime;
};

int
cmdFp(FpOptions const& o, std::ostream& out)
{
    auto handle = build(loadSpec(o.spec));
    bool useExact = o.exact || (!o.mc && handle.universeSize() <= kExactMaxUniverse);
    json j = {{"system", describe(handle.spec())}, {"p", o.p}};
    if (useExact)
    {
        j["estimate"] = estimateJson(crashProbExact(handle, o.p));
    }
    else
    {
        j["estimate"] = estimateJson(
            crashProbMonteCarlo(handle, o.p, o.trials, o.seed, threadsFromEnv()));
    }
    if (o.bounds)
    {
        double pPrime = o.pPrime.value_or((o.p + 1.0 / 3.0) / 2.0);
        j["bounds"] = boundsJson(handle, o.p, pPrime);
    }
    out << j.dump(2) << "\n";
    return kOk;
}

int
cmdCompose(std::string const& outerArg, std::string const& innerArg,
           std::uint64_t cap, std::ostream& out)
{
    auto spec = ConstructionSpec::composed(loadSpec(outerArg), loadSpec(innerArg));
    auto handle = build(spec);
    json j = {{"system", describe(spec)},
              {"spec", specToJson(spec)},
              {"params", paramsToJson(handle.params())},
              {"quorums", handle.quorumCount()}};
    if (handle.quorumCount() <= cap)
    {
        auto sys = handle.materialize(cap);
        json m = {{"quorums", sys.quorumCount()},
                  {"c", smallestQuorum(sys)},
                  {"iMin", smallestIntersection(sys)}};
        try
        {
            m["aMin"] = minimumTransversal(sys).count();
        }
        catch (SizeError const&)
        {
            m["aMin"] = "too large for exact search";
        }
        j["materialized"] = m;
    }
    out << j.dump(2) << "\n";
    return kOk;
}

struct Table8Row
{
    std::string system;
    SystemParams params;
    std::string kind;
    std::string value;
    std::string published;
};

int
cmdTable8(double p, std::size_t n, std::string const& format, std::ostream& out)
{
    if (n != kTable8Universe)
    {
        throw ParameterError("table8 is tabulated for n = 1024 only");
    }
    if (!(p > 0.0 && p < 1.0))
    {
        throw ParameterError("p must lie in (0, 1)");
    }
    bool publishedP = p == kTable8DefaultP;
    auto publishedValue = [&](char const* v) { return publishedP ? std::string(v) : ""; };
    std::vector<Table8Row> rows;

    auto mgrid = build({MGridSpec{32, 15}});
    rows.push_back({describe(mgrid.spec()), mgrid.params(), "lower",
                    sig6(mgridFpLower(32, p)), publishedValue("0.638")});

    auto rt = build({RTSpec{4, 3, 5}});
    rows.push_back({describe(rt.spec()), rt.params(), "upper",
                    sig6(rtFpUpper(4, 3, 5, p).value), publishedValue("0.0001")});

    auto boost = build({BoostFPPSpec{3, 19}});
    rows.push_back({describe(boost.spec()), boost.params(), "upper",
                    p < 0.25 ? sig6(boostFppFpUpper(3, 19, p).roundedForm.value)
                             : "n/a",
                    publishedValue("0.372")});

    auto mpath = build({MPathSpec{32, 7}});
    double pPrime = p < kTable8PPrime ? kTable8PPrime : (p + 1.0 / 3.0) / 2.0;
    rows.push_back({describe(mpath.spec()), mpath.params(), "upper",
                    p < 1.0 / 3.0 ? sig6(mpathFpUpper(32, 7, p, pPrime).value)
                                  : "n/a",
                    publishedValue("0.001")});

    std::string const note =
        "MPath(32,7): f = a_min - 1 = 28; the published comparison lists 29";

    if (format == "json")
    {
        json j = {{"p", p}, {"n", n}, {"rows", json::array()}};
        for (auto const& r : rows)
        {
            j["rows"].push_back({{"system", r.system},
                                 {"n", r.params.n},
                                 {"b", r.params.b},
                                 {"f", r.params.f},
                                 {"load", prob(r.params.load)},
                                 {"fp_kind", r.kind},
                                 {"fp_value", r.value},
                                 {"paper_value", r.published}});
        }
        j["notes"] = json::array({note});
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "system,n,b,f,load,fp_kind,fp_value,paper_value\n";
    for (auto const& r : rows)
    {
        out << r.system << "," << r.params.n << "," << r.params.b << ","
            << r.params.f << "," << sig6(r.params.load) << "," << r.kind << ","
            << r.value << "," << r.published << "\n";
    }
    out << "# " << note << "\n";
    return kOk;
}

struct CheckList
{
    json items = json::array();
    bool ok = true;

    void
    add(std::string name, bool pass, std::string detail = {})
    {
        ok = ok && pass;
        json j = {{"check", std::move(name)}, {"ok", pass}};
        if (!detail.empty())
        {
            j["detail"] = std::move(detail);
        }
        items.push_back(std::move(j));
    }
};

int
cmdOracle(std::string const& specArg, std::uint64_t cap, std::ostream& out)
{
    auto handle = build(loadSpec(specArg));
    auto const& params = handle.params();
    auto sys = handle.materialize(cap);
    bool straightOnly = containsMPath(handle.spec());
    CheckList checks;

    checks.add("pairwise intersection", validateExplicit(sys).ok());

    auto brute = combinatorialParams(sys);
    auto detail = [](std::int64_t got, std::int64_t want) {
        return "brute force " + std::to_string(got) + ", analytic " +
               std::to_string(want);
    };
    checks.add("c", brute.c == params.c, detail(brute.c, params.c));
    if (straightOnly)
    {
        checks.add("iMin >= 2b+1", brute.iMin >= 2 * params.b + 1,
                   detail(brute.iMin, 2 * params.b + 1));
    }
    else
    {
        checks.add("iMin", brute.iMin == params.iMin, detail(brute.iMin, params.iMin));
    }
    checks.add("aMin", brute.aMin == params.aMin, detail(brute.aMin, params.aMin));

    if (!straightOnly)
    {
        auto level = maskingLevel(sys);
        checks.add("masking level", level == params.b,
                   detail(level, params.b));
        if (sys.universeSize() <= kDefinitionalMaxUniverse && level >= 0)
        {
            bool holds = checkMasking(sys, level).masking;
            bool next = checkMasking(sys, level + 1).masking;
            checks.add("definitional masking check", holds && !next);
        }
    }
    if (params.b >= 0)
    {
        auto lp = loadLp(sys);
        auto fair = checkFairness(sys);
        if (fair.fair)
        {
            checks.add("lp load = c/n", std::abs(lp.load - loadFair(sys)) <= 1e-6,
                       sig6(lp.load) + " vs " + sig6(loadFair(sys)));
        }
        auto lower = loadLowerBounds(params.n, params.b, params.c);
        checks.add("lp load >= lower bound", lp.load >= lower.general - 1e-9,
                   sig6(lp.load) + " vs " + sig6(lower.general));
    }

    Rng rng(0x6f7261636c65ULL);
    bool liveAgrees = true;
    for (std::uint64_t t = 0; t < kOracleLiveSamples; ++t)
    {
        auto alive = sampleCrashSet(sys.universeSize(), 0.5, rng.forTrial(rng.seed(), t));
        bool viaList = sys.live(alive);
        bool viaHandle = handle.live(alive);
        liveAgrees = liveAgrees && (straightOnly ? (!viaList || viaHandle)
                                                 : viaList == viaHandle);
    }
    checks.add("live predicate vs quorum list", liveAgrees);

    if (!straightOnly && sys.universeSize() <= kExactMaxUniverse)
    {
        bool boundsHold = true;
        auto profile = crashProfile(sys);
        for (double p : {0.1, 0.3, 0.5, 0.7, 0.9})
        {
            double fp = profile.evaluate(p);
            auto lb = fpLowerBounds(params, p);
            boundsHold = boundsHold && fp >= lb.transversal - 1e-12;
            if (params.b >= 0)
            {
                boundsHold = boundsHold && fp >= lb.quorumMinus - 1e-12;
            }
            if (lb.masking)
            {
                boundsHold = boundsHold && fp >= *lb.masking - 1e-12;
            }
        }
        checks.add("exact F_p >= lower bounds", boundsHold);
    }

    json j = {{"system", describe(handle.spec())},
              {"quorums", sys.quorumCount()},
              {"checks", checks.items},
              {"ok", checks.ok}};
    out << j.dump(2) << "\n";
    return checks.ok ? kOk : kOracleMismatch;
}

} // namespace

int
run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Build and analyse b-masking quorum systems", "maskquorum"};
    app.require_subcommand(1);

    std::string specArg;
    std::string innerArg;
    std::uint64_t cap = kDefaultMaterializeCap;

    auto* params = app.add_subcommand("params", "Print system parameters as JSON");
    params->add_option("spec", specArg, "Spec as inline JSON or a file")->required();

    auto* load = app.add_subcommand("load", "Load by LP, or analytic when large");
    load->add_option("spec", specArg, "Spec as inline JSON or a file")->required();
    load->add_option("--materialize-cap", cap, "Largest quorum count to solve by LP");

    FpOptions fp;
    auto* fpCmd = app.add_subcommand("fp", "Crash probability and bounds");
    fpCmd->add_option("spec", fp.spec, "Spec as inline JSON or a file")->required();
    fpCmd->add_option("--p", fp.p, "Crash probability per server")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    auto* exactFlag = fpCmd->add_flag("--exact", fp.exact, "Exact enumeration (n <= 25)");
    auto* mcFlag = fpCmd->add_flag("--mc", fp.mc, "Monte Carlo estimate");
    exactFlag->excludes(mcFlag);
    fpCmd->add_option("--trials", fp.trials, "Monte Carlo trials")
        ->check(CLI::PositiveNumber);
    fpCmd->add_option("--seed", fp.seed, "Monte Carlo seed");
    fpCmd->add_flag("--bounds", fp.bounds, "Also print the analytic bounds");
    fpCmd->add_option("--p-prime", fp.pPrime, "p' for the M-Path bound");

    auto* compose = app.add_subcommand("compose", "Parameters of outer over inner");
    compose->add_option("outer", specArg, "Outer spec")->required();
    compose->add_option("inner", innerArg, "Inner spec")->required();
    compose->add_option("--materialize-cap", cap, "Largest quorum count to materialize");

    double tableP = kTable8DefaultP;
    std::size_t tableN = kTable8Universe;
    std::string format = "csv";
    auto* table8 = app.add_subcommand("table8", "Comparison of the n = 1024 systems");
    table8->add_option("--p", tableP, "Crash probability per server");
    table8->add_option("--n", tableN, "Universe size (1024)");
    table8->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
    oracle->add_option("spec", specArg, "Spec as inline JSON or a file")->required();
    oracle->add_option("--materialize-cap", cap, "Largest quorum count to materialize");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return kOk;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << "\n";
        return kParameterError;
    }

    try
    {
        if (params->parsed())
        {
            return cmdParams(specArg, out);
        }
        if (load->parsed())
        {
            return cmdLoad(specArg, cap, out);
        }
        if (fpCmd->parsed())
        {
            return cmdFp(fp, out);
        }
        if (compose->parsed())
        {
            return cmdCompose(specArg, innerArg, cap, out);
        }
        if (table8->parsed())
        {
            return cmdTable8(tableP, tableN, format, out);
        }
        if (oracle->parsed())
        {
            return cmdOracle(specArg, cap, out);
        }
    }
    catch (UnsupportedOrderError const& e)
    {
        err << "error: unsupported order: " << e.what() << "\n";
        return kParameterError;
    }
    catch (ParameterError const& e)
    {
        err << "error: " << e.what() << "\n";
        return kParameterError;
    }
    catch (ApplicabilityError const& e)
    {
        err << "error: not applicable: " << e.what() << "\n";
        return kParameterError;
    }
    catch (SizeError const& e)
    {
        err << "error: too large: " << e.what() << "\n";
        return kSizeError;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

} // namespace maskquorum::cli
