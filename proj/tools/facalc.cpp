#include "fa/facalc.hpp"
#include "fa/json_io.hpp"
#include "fa/oracle/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fa;
using namespace fa::oracle;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitCounterexample = 2;

struct Options {
    int trunc = 6;
    std::string format = "json";
    std::uint64_t seed = 0;
};

struct Output {
    json data;
    std::vector<std::string> tsv;
    int status = 0;
};

std::string paren(const Partition& p)
{
    return "(" + p.str() + ")";
}

void irr_rows(const IrrDecomposition& d, std::vector<std::string>& rows)
{
    for (const auto& [p, c] : d.mults)
        rows.push_back(std::to_string(p.size()) + "\t" + paren(p) + "\t" + std::to_string(c));
}

int label_degree(const SimpleLabel& l)
{
    return l.kind() == SimpleLabel::Kind::C ? l.lambda().size() : l.n();
}

void label_rows(const std::map<SimpleLabel, std::int64_t>& m, std::vector<std::string>& rows)
{
    for (const auto& [l, c] : m)
        rows.push_back(std::to_string(label_degree(l)) + "\t" + l.str() + "\t" + std::to_string(c));
}

json projective_to_json(const ProjectiveLabel& p)
{
    if (p.kind == ProjectiveLabel::Kind::LambdaPfin)
        return json{{"kind", "lambda_pfin"}, {"j", p.j}};
    return json{{"kind", "schur_pbar"}, {"nu", partition_to_json(p.nu)}};
}

Output report_output(const Report& r)
{
    Output o;
    o.data = r.to_json();
    for (const auto& c : r.claims)
        o.tsv.push_back(c.id + "\t" + c.params.dump() + "\t" + (c.pass ? "pass" : "fail"));
    if (const Claim* f = r.first_failure()) {
        o.status = kExitCounterexample;
        std::cerr << json{{"counterexample", f->id}, {"params", f->params}}.dump() << "\n";
    }
    return o;
}

Output decompose_pfin(const std::string& text)
{
    Partition lambda = Partition::parse(text);
    auto summands = decompose_schur_pfin(lambda);
    Output o;
    json arr = json::array();
    for (const auto& s : summands) {
        arr.push_back(projective_to_json(s));
        if (s.kind == ProjectiveLabel::Kind::LambdaPfin)
            o.tsv.push_back(std::to_string(s.j) + "\tLambda^" + std::to_string(s.j) + "\t1");
        else
            o.tsv.push_back(std::to_string(s.nu.size()) + "\t" + paren(s.nu) + "\t1");
    }
    o.data = json{{"lambda", partition_to_json(lambda)}, {"summands", arr}};
    return o;
}

Output simple_eval_cmd(const std::vector<std::string>& tokens, int t)
{
    std::string text;
    for (const auto& tok : tokens)
        text += (text.empty() ? "" : " ") + tok;
    SimpleLabel label = SimpleLabel::parse(text);
    if (t < 0)
        throw std::invalid_argument("--t must be nonnegative");
    IrrDecomposition d = simple_eval(label, t);
    Output o;
    o.data = json{{"label", label.str()}, {"t", t}, {"value", irr_to_json(d)}, {"dimension", d.dimension()}};
    irr_rows(d, o.tsv);
    return o;
}

Output structure_kfi_cmd(int n)
{
    KfiStructure s = structure_kfi(n);
    Output o;
    o.data = json{{"n", n},
                  {"projective", projective_to_json(s.projective)},
                  {"simples", labels_to_json(s.simples)},
                  {"composition_factors", labels_to_json(s.composition_factors())}};
    label_rows(s.composition_factors(), o.tsv);
    return o;
}

std::pair<std::string, int> split_descriptor(const std::string& d)
{
    auto colon = d.find(':');
    if (colon == std::string::npos)
        return {d, -1};
    std::string arg = d.substr(colon + 1);
    if (arg.empty() || arg.size() > 3 || arg.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed descriptor '" + d + "'");
    return {d.substr(0, colon), std::stoi(arg)};
}

std::string target_descriptor(const std::string& d)
{
    auto [head, arg] = split_descriptor(d);
    if (head == "lambdabar")
        return "lambdapbar:" + std::to_string(arg);
    return d;
}

Output hom_cmd(const std::string& from, const std::string& to, int N)
{
    if (N < 2)
        throw std::invalid_argument("hom needs --trunc >= 2");
    TruncatedFunctor G = build(target_descriptor(to), N);
    auto [head, arg] = split_descriptor(from);
    auto need = [&](int size) {
        if (N < size)
            throw std::invalid_argument("hom from " + from + " needs --trunc >= " + std::to_string(size));
    };
    HomResult h;
    json formula;
    if (head == "pbar") {
        need(arg + 2);
        h = hom_from_pbar_tensor(arg, G);
        auto [thead, targ] = split_descriptor(to);
        if (thead == "pbar")
            formula = bimod_decomposition_to_json(pbar_hom_block(hom_pbar_pbar(std::max(arg, targ)), arg, targ));
    } else if (head == "pfin") {
        need(arg);
        h = hom_from_pfin(arg, G);
    } else if (head == "proj") {
        need(arg + 2);
        h = hom_from_projcover(arg, G);
        auto [thead, targ] = split_descriptor(to);
        if (thead == "pfin")
            formula = bimod_decomposition_to_json(hom_projcover_pfin(targ, arg).block(targ, arg));
    } else if (head == "lambdabar") {
        need(arg + 2);
        h = hom_from_lambda_bar(arg, G);
    } else if (head == "lambdapfin") {
        need(arg);
        h = hom_from_lambda_pfin(arg, G);
    } else {
        h = nat_hom(build(target_descriptor(from), N), G);
    }
    Output o;
    json entries = bimod_decomposition_to_json(h.decomposition());
    o.data = json{{"from", from}, {"to", to}, {"N", N}, {"method", h.method}, {"dimension", h.dimension},
                  {"character", entries}};
    if (!formula.is_null()) {
        o.data["formula"] = formula;
        o.data["formula_agrees"] = formula == entries;
    }
    o.tsv.push_back("dimension\t-\t" + std::to_string(h.dimension));
    for (const auto& [k, c] : h.decomposition())
        o.tsv.push_back(std::to_string(k.first.size()) + "," + std::to_string(k.second.size()) + "\t" +
                        paren(k.first) + "x" + paren(k.second) + "\t" + std::to_string(c));
    if (!formula.is_null() && formula != entries)
        o.status = kExitCounterexample;
    return o;
}

Output multiplicities_cmd(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read input file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    FBModuleData F = fb_module_from_json(j);
    MultiplicityResult r = multiplicities(F);
    if (!r.ok()) {
        std::string labels;
        for (const auto& l : r.negative)
            labels += (labels.empty() ? "" : ", ") + l;
        throw std::invalid_argument("input is not the FB-module of an FA-module: negative multiplicity at " + labels);
    }
    Output o;
    o.data = json{{"trunc", F.trunc}, {"valid_degrees", F.trunc - 1}, {"multiplicities", labels_to_json(r.mults)}};
    label_rows(r.mults, o.tsv);
    return o;
}

void emit(const Output& o, const Options& opt)
{
    if (opt.format == "tsv") {
        for (const auto& row : o.tsv)
            std::cout << row << "\n";
    } else {
        std::cout << o.data.dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"facalc: exact computations for representations of finite sets and all maps"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--trunc", opt.trunc, "truncation degree / largest set size")
        ->envname("FACALC_TRUNC")
        ->check(CLI::Range(0, 64));
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--seed", opt.seed, "seed for randomized suites");

    std::string partition_text;
    auto* decompose = app.add_subcommand("decompose-pfin", "summands of S_lambda(P^FA)");
    decompose->add_option("lambda", partition_text, "partition, e.g. 2,1")->required();

    std::vector<std::string> label_tokens;
    int t = 0;
    auto* simple = app.add_subcommand("simple-eval", "value of a simple functor at a set of size t");
    simple->add_option("label", label_tokens, "k0 | L <n> | C <partition>")->required();
    simple->add_option("--t", t, "set size")->required();

    int kfi_n = 0;
    auto* kfi = app.add_subcommand("structure-kfi", "decomposition of kFI(n, -)");
    kfi->add_option("n", kfi_n, "n >= 1")->required();

    std::string from, to;
    auto* hom = app.add_subcommand("hom", "hom space between built functors, via the oracle");
    hom->add_option("--from", from, "pbar:s | pfin:n | proj:n | lambdabar:s | lambdapfin:k | kfi:n | const")
        ->required();
    hom->add_option("--to", to, "target functor descriptor")->required();

    std::string input;
    auto* mult = app.add_subcommand("multiplicities", "composition multiplicities from FB-module data");
    mult->add_option("--input", input, "JSON file with trunc, F0_dim and degrees")->required();

    std::string identity;
    auto* groth = app.add_subcommand("groth", "check a Grothendieck group identity");
    groth->add_option("--identity", identity, "identity name")
        ->required()
        ->check(CLI::IsMember(groth_identity_names()));

    std::string suite;
    int max_size = 6;
    auto* verify = app.add_subcommand("verify", "run an oracle verification suite");
    auto names = suite_names();
    names.push_back("all");
    verify->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(names));
    verify->add_option("--max-size", max_size, "largest set size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitInvalid;
    }

    try {
        Output o;
        if (*decompose)
            o = decompose_pfin(partition_text);
        else if (*simple)
            o = simple_eval_cmd(label_tokens, t);
        else if (*kfi)
            o = structure_kfi_cmd(kfi_n);
        else if (*hom)
            o = hom_cmd(from, to, opt.trunc);
        else if (*mult)
            o = multiplicities_cmd(input);
        else if (*groth)
            o = report_output(groth_identity(identity, opt.trunc));
        else if (*verify)
            o = report_output(run_suite(suite, max_size, opt.seed));
        emit(o, opt);
        return o.status;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return kExitInvalid;
    }
}
