// Command line surface: seed mutation, exchange-graph exploration, the
// cluster character map, and the verification suites.
//
// Exit codes: 0 success, 1 failed verification, 2 invalid input,
// 3 inexact exchange division, 4 enumeration budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "clusterforge/ccmap.hpp"
#include "clusterforge/verify.hpp"

using namespace clusterforge;
using nlohmann::json;

namespace {

struct CommonArgs {
    std::string quiver;
    std::string file;
    std::string format = "json";
    int64_t max_seeds = 100000;
    int max_depth = 64;
    uint64_t budget = 10'000'000;
    uint32_t prime = kDefaultPrime;
    int verify_points = 1;
    bool parallel = false;
    int n_max = 10;
};

QuiverSpec resolve_quiver(const CommonArgs& args) {
    if (!args.quiver.empty() && !args.file.empty())
        throw std::invalid_argument("give either --quiver or --file, not both");
    if (!args.quiver.empty()) return preset_quiver(args.quiver);
    if (!args.file.empty()) {
        std::ifstream in(args.file);
        if (!in) throw std::invalid_argument("cannot open " + args.file);
        json j;
        in >> j;
        return quiver_from_json(j);
    }
    throw std::invalid_argument("a quiver is required (--quiver or --file)");
}

uint64_t seed_from_env() {
    if (const char* env = std::getenv("CLUSTER_FORGE_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_quiver = true) {
    if (with_quiver) {
        cmd->add_option("--quiver", args.quiver, "preset quiver (a1..a6, d4, kronecker)");
        cmd->add_option("--file", args.file, "quiver JSON file ({n, matrix|arrows})");
    }
    cmd->add_option("--format", args.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-seeds", args.max_seeds, "exploration cap on seeds");
    cmd->add_option("--max-depth", args.max_depth, "exploration cap on mutation depth");
    cmd->add_option("--budget", args.budget, "Grassmannian enumeration budget");
    cmd->add_option("--prime", args.prime, "prime for structural linear algebra");
    cmd->add_option("--primes", args.verify_points,
                    "extra confirming primes for counting-polynomial interpolation");
    cmd->add_flag("--parallel", args.parallel, "enable the deterministic parallel paths");
    cmd->add_option("--n-max", args.n_max, "range for the Kronecker recurrence checks");
}

CCOptions cc_options(const CommonArgs& args) {
    CCOptions cc;
    cc.chi.budget = args.budget;
    cc.chi.verify_points = args.verify_points;
    cc.chi.parallel = args.parallel;
    cc.structure_prime = args.prime;
    cc.generic_seed = seed_from_env();
    return cc;
}

ObjectFamily resolve_object(const ContextPtr& ctx, const std::string& spec,
                            const std::string& root, const std::string& rep_file) {
    int given = !spec.empty() + !root.empty() + !rep_file.empty();
    if (given != 1)
        throw std::invalid_argument("give exactly one of --object, --root, --rep-file");

    if (!root.empty()) {
        DimVec d;
        std::stringstream ss(root);
        std::string item;
        while (std::getline(ss, item, ',')) d.push_back(std::stoll(item));
        if (static_cast<int>(d.size()) != ctx->n)
            throw std::invalid_argument("--root length must match the vertex count");
        return root_object_family(ctx, d, seed_from_env());
    }
    if (!rep_file.empty()) {
        std::ifstream in(rep_file);
        if (!in) throw std::invalid_argument("cannot open " + rep_file);
        json j;
        in >> j;
        // Entries are read as integers and reduced mod each sampled prime.
        ObjectFamily f = zero_object_family(ctx);
        f.name = rep_file;
        f.module_dims = DimVec(j.at("dims").begin(), j.at("dims").end());
        f.module_at = [ctx, j](uint32_t p) {
            json copy = j;
            copy["p"] = p;
            for (auto& arrow : copy.at("arrows"))
                for (auto& row : arrow.at("matrix"))
                    for (auto& entry : row) entry = entry.get<int64_t>() % p;
            return rep_from_json(ctx, copy);
        };
        return f;
    }

    return parse_object_spec(ctx, spec, seed_from_env());
}

void print_seed(const Seed& s, const std::string& format) {
    if (format == "json") {
        std::cout << s.to_json().dump() << "\n";
        return;
    }
    std::cout << "cluster:\n";
    for (int i = 0; i < s.n(); ++i)
        std::cout << "  u" << (i + 1) << " = " << s.cluster[i].to_string() << "\n";
    std::cout << "matrix:\n";
    for (int i = 0; i < s.n(); ++i) {
        std::cout << " ";
        for (int j = 0; j < s.n(); ++j) std::cout << " " << s.matrix.at(i, j);
        std::cout << "\n";
    }
}

int cmd_mutate(const CommonArgs& args, const std::vector<int>& directions) {
    Seed s = initial_seed(resolve_quiver(args));
    for (int j : directions) {
        if (j < 1 || j > s.n())
            throw std::invalid_argument("mutation direction out of range: " + std::to_string(j));
        s = seed_mutate(s, j - 1);
    }
    print_seed(s, args.format);
    return 0;
}

int cmd_explore(const CommonArgs& args) {
    ExploreOptions opts;
    opts.max_seeds = args.max_seeds;
    opts.max_depth = args.max_depth;
    opts.parallel = args.parallel;
    auto g = explore(initial_seed(resolve_quiver(args)), opts);
    if (args.format == "json") {
        std::cout << g.to_json().dump() << "\n";
    } else {
        std::cout << "seeds: " << g.nodes.size() << " (labeled " << g.labeled_seed_count()
                  << ")\nedges: " << g.edges.size()
                  << "\nvariables: " << cluster_variables(g).size()
                  << "\ncomplete: " << (g.complete ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_ccmap(const CommonArgs& args, const std::string& object, const std::string& root,
              const std::string& rep_file) {
    auto ctx = make_context(resolve_quiver(args));
    ObjectFamily fam = resolve_object(ctx, object, root, rep_file);
    CCResult res = cc_of_object(fam, cc_options(args));
    if (args.format == "json") {
        std::cout << res.to_json().dump() << "\n";
    } else {
        std::cout << res.object << ": " << res.polynomial.to_string() << "\n";
        std::cout << "numerator: " << res.denominator.numerator.to_string() << "\nd: (";
        for (size_t i = 0; i < res.denominator.denominator_exponents.size(); ++i)
            std::cout << (i ? "," : "") << res.denominator.denominator_exponents[i];
        std::cout << ")\n";
    }
    return 0;
}

int cmd_verify(const CommonArgs& args, const std::string& suite) {
    verify::VerifyOptions opts;
    opts.budget = args.budget;
    opts.prime = args.prime;
    opts.seed = seed_from_env();
    opts.n_max = args.n_max;
    opts.cc_max = std::min(args.n_max - 2, 7);
    opts.max_seeds = args.max_seeds;
    opts.max_depth = args.max_depth;
    opts.parallel = args.parallel;
    auto reports = verify::run_suite(suite, args.quiver, opts);
    bool pass = true;
    if (args.format == "json") {
        json out = json::array();
        for (const auto& r : reports) {
            out.push_back(r.to_json());
            pass = pass && r.pass();
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.to_text();
            pass = pass && r.pass();
        }
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cluster-algebra engine: mutation, exploration, cluster characters"};
    app.require_subcommand(1);

    CommonArgs margs, eargs, cargs, vargs;
    std::vector<int> directions;
    std::string object, root, rep_file, suite;

    auto* mutate = app.add_subcommand("mutate", "apply a mutation sequence to the initial seed");
    add_common(mutate, margs);
    mutate->add_option("directions", directions, "1-based mutation directions");

    auto* explore_cmd = app.add_subcommand("explore", "breadth-first exchange-graph closure");
    add_common(explore_cmd, eargs);

    auto* ccmap_cmd = app.add_subcommand("ccmap", "cluster character of a module or object");
    add_common(ccmap_cmd, cargs);
    ccmap_cmd->add_option("--object", object,
                          "object spec: SP:i | S:i | P:i | interval:a:b | kronecker:U|V|W:n");
    ccmap_cmd->add_option("--root", root, "dimension vector d1,d2,... of a generic module");
    ccmap_cmd->add_option("--rep-file", rep_file, "representation JSON file");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_common(verify_cmd, vargs);
    verify_cmd
        ->add_option("suite", suite,
                     "denominator | exchange | bijection | laurent | connectivity | kronecker "
                     "| properties")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mutate->parsed()) return cmd_mutate(margs, directions);
        if (explore_cmd->parsed()) return cmd_explore(eargs);
        if (ccmap_cmd->parsed()) return cmd_ccmap(cargs, object, root, rep_file);
        if (verify_cmd->parsed()) return cmd_verify(vargs, suite);
    } catch (const NotDivisibleError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const BudgetExceededError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
