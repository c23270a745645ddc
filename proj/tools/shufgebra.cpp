// Command-line front end: products, specializations, verification suites
// and PBW basis checks.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <shufgebra.hpp>

namespace {

using namespace shufgebra;
using nlohmann::ordered_json;

enum Exit { ok = 0, math_failure = 1, usage = 2 };

struct Common {
    unsigned n = 2;
    std::string field = "q";
    std::optional<unsigned> p;
    bool json = false;

    std::optional<unsigned> prime() const
    {
        if (field == "q") {
            if (p)
                throw invalid_input("--p needs --field fp");
            return std::nullopt;
        }
        if (!p)
            throw invalid_input("--field fp needs --p");
        PrimeField check(*p);
        return p;
    }
};

void add_common(CLI::App* cmd, Common& c)
{
    cmd->add_option("--n", c.n, "rank n of sl_n (>= 2)");
    cmd->add_option("--field", c.field, "coefficient field")->check(CLI::IsMember({"q", "fp"}));
    cmd->add_option("--p", c.p, "prime for --field fp");
    cmd->add_flag("--json", c.json, "structured output");
}

// An argument naming an existing file is replaced by the file's contents.
std::string element_text(const std::string& arg)
{
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec))
        return arg;
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<unsigned> grading_vector(const Grading& k)
{
    std::vector<unsigned> out;
    for (unsigned c = 1; c <= k.colors(); ++c)
        out.push_back(k.at(c));
    return out;
}

template <Coefficient K>
void print_element(const ShuffleElement<K>& F, bool json)
{
    if (!json) {
        std::cout << to_string(F.numerator()) << '\n';
        return;
    }
    ordered_json j;
    j["n"] = F.rank();
    j["field"] = F.field().tag();
    j["grading"] = grading_vector(F.grading());
    j["numerator"] = to_string(F.numerator());
    std::cout << j.dump() << '\n';
}

template <class Field>
int run_mul(const std::vector<std::string>& args, const std::vector<std::string>& gradings, const Common& c,
            const Field& field)
{
    using K = typename Field::value_type;
    if (!gradings.empty() && gradings.size() != args.size())
        throw invalid_input("give one --grading per element or none");
    std::optional<ShuffleElement<K>> acc;
    for (std::size_t a = 0; a < args.size(); ++a) {
        std::optional<Grading> k;
        if (!gradings.empty())
            k = parse_grading(gradings[a]);
        auto F = parse_element<K>(element_text(args[a]), c.n, field, k);
        acc = acc ? shuffle_mul(*acc, F) : F;
    }
    print_element(*acc, c.json);
    return ok;
}

template <class Field>
int run_specialize(const std::string& arg, const std::string& d_text, const std::optional<std::string>& grading,
                   bool reduced, const Common& c, const Field& field)
{
    using K = typename Field::value_type;
    std::optional<Grading> k;
    if (grading)
        k = parse_grading(*grading);
    auto F = parse_element<K>(element_text(arg), c.n, field, k);
    auto d = parse_kostant_partition(d_text, c.n);
    try {
        auto out = reduced ? xi(d, F) : phi(d, F);
        if (c.json) {
            ordered_json j;
            j["d"] = d.to_string();
            j["reduced"] = reduced;
            j["polynomial"] = to_string(out);
            std::cout << j.dump() << '\n';
        } else {
            std::cout << to_string(out) << '\n';
        }
    } catch (const not_divisible& e) {
        if (c.json) {
            ordered_json j;
            j["error"] = "NOT_DIVISIBLE";
            j["witness"] = e.witness();
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "NOT_DIVISIBLE witness: " << e.witness() << '\n';
        }
        return math_failure;
    }
    return ok;
}

void print_report(const SuiteReport& rep, bool json, bool timing)
{
    if (json) {
        ordered_json j;
        j["suite"] = rep.suite;
        j["config"] = rep.config;
        j["records"] = ordered_json::array();
        for (const auto& r : rep.records) {
            ordered_json rec;
            rec["statement"] = r.statement;
            rec["parameters"] = r.parameters;
            rec["status"] = to_string(r.status);
            if (r.status == Status::Fail)
                rec["witness"] = r.witness;
            if (timing)
                rec["elapsed_ms"] = r.elapsed_ms;
            j["records"].push_back(std::move(rec));
        }
        j["passed"] = rep.passed();
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::cout << "suite " << rep.suite << "  (" << rep.config << ")\n";
    std::size_t width = 0;
    for (const auto& r : rep.records)
        width = std::max(width, r.statement.size());
    for (const auto& r : rep.records) {
        std::cout << to_string(r.status) << "  " << r.statement << std::string(width - r.statement.size() + 2, ' ')
                  << r.parameters;
        if (timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "  [%.1f ms]", r.elapsed_ms);
            std::cout << buf;
        }
        std::cout << '\n';
        if (r.status == Status::Fail && !r.witness.empty())
            std::cout << "      witness: " << r.witness << '\n';
    }
    std::cout << rep.count(Status::Pass) << " passed, " << rep.count(Status::Fail) << " failed, "
              << rep.count(Status::Skip) << " skipped\n";
}

int run_basis(const Grading& k, unsigned degree, const PrimeField& field, bool json)
{
    auto check = pbw_basis_check(k, degree, field);
    if (json) {
        ordered_json j;
        j["grading"] = grading_vector(k);
        j["degree"] = degree;
        j["p"] = field.p;
        j["exponents"] = ordered_json::array();
        for (const auto& h : check.exponents)
            j["exponents"].push_back(h.to_string());
        j["rank"] = check.rank;
        j["w_tilde_dimension"] = check.w_tilde_dim;
        j["all_in_w_tilde"] = check.all_in_w_tilde;
        j["independent"] = check.independent();
        j["spans"] = check.spans();
        if (check.dependent)
            j["dependent"] = *check.dependent;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "grading " << k.to_string() << ", numerator degree <= " << degree << ", p = " << field.p << '\n';
        for (const auto& h : check.exponents)
            std::cout << "  " << h.to_string() << "  deg " << h.numerator_degree() << '\n';
        std::cout << "images: " << check.exponents.size() << "  rank: " << check.rank
                  << "  wheel-p piece dimension: " << check.w_tilde_dim << '\n';
        std::cout << "independent: " << (check.independent() ? "yes" : "no")
                  << "  in wheel-p subspace: " << (check.all_in_w_tilde ? "yes" : "no")
                  << "  spans: " << (check.spans() ? "yes" : "no") << '\n';
        if (check.dependent)
            std::cout << "dependent: " << *check.dependent << '\n';
    }
    return check.spans() ? ok : math_failure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact shuffle algebra computations for the positive Yangian of sl_n"};
    app.require_subcommand(1);

    Common common;

    auto* mul = app.add_subcommand("mul", "shuffle product of elements, left to right");
    std::vector<std::string> mul_args, mul_gradings;
    add_common(mul, common);
    mul->add_option("elements", mul_args, "numerators in canonical text, or files holding them")->required();
    mul->add_option("--grading", mul_gradings, "grading per element, e.g. 1,1 (default: inferred)");

    auto* spec = app.add_subcommand("specialize", "phi_d (or xi_d with --reduced) of an element");
    std::string spec_arg, spec_d;
    std::optional<std::string> spec_grading;
    bool reduced = false;
    add_common(spec, common);
    spec->add_option("element", spec_arg, "numerator in canonical text, or a file")->required();
    spec->add_option("--d", spec_d, "Kostant partition, e.g. {[1,1]:1, [2,2]:1}")->required();
    spec->add_option("--grading", spec_grading, "grading of the element (default: inferred)");
    spec->add_flag("--reduced", reduced, "divide by the G_beta factors");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteConfig cfg;
    std::optional<unsigned> k_count;
    bool timing = false;
    add_common(verify, common);
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--degree", cfg.degree, "degree bound D");
    verify->add_option("--rmax", cfg.r_max, "largest r in generators e_{i,r}");
    verify->add_option("--seed", cfg.seed, "seed for sampled checks");
    verify->add_option("--k", k_count, "number of variables (rank-one suites, hl)");
    verify->add_option("--samples", cfg.samples, "sample count for sampled checks");
    verify->add_flag("--timing", timing, "report elapsed time per check");

    auto* basis = app.add_subcommand("basis", "independence and spanning of p-restricted PBW images");
    std::string basis_k;
    unsigned basis_degree = 3;
    add_common(basis, common);
    basis->add_option("--k", basis_k, "grading vector, e.g. 1,1")->required();
    basis->add_option("--degree", basis_degree, "numerator degree bound D");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        const auto p = common.prime();
        if (*mul) {
            if (p)
                return run_mul(mul_args, mul_gradings, common, PrimeField(*p));
            return run_mul(mul_args, mul_gradings, common, RationalField{});
        }
        if (*spec) {
            if (p)
                return run_specialize(spec_arg, spec_d, spec_grading, reduced, common, PrimeField(*p));
            return run_specialize(spec_arg, spec_d, spec_grading, reduced, common, RationalField{});
        }
        if (*verify) {
            cfg.n = common.n;
            cfg.p = p;
            cfg.k = k_count;
            auto rep = run_suite(suite, cfg);
            print_report(rep, common.json, timing);
            return rep.passed() ? ok : math_failure;
        }
        if (*basis) {
            if (!p)
                throw invalid_input("basis needs --field fp --p P");
            auto k = parse_grading(basis_k);
            if (k.rank() != common.n)
                throw invalid_input("--k " + k.to_string() + " does not have rank " + std::to_string(common.n));
            return run_basis(k, basis_degree, PrimeField(*p), common.json);
        }
    } catch (const not_divisible& e) {
        std::cerr << "error: " << e.what() << "\nwitness: " << e.witness() << '\n';
        return math_failure;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return math_failure;
    }
    return usage;
}
