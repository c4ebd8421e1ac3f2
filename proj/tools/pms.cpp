#include "pms/experiments.hpp"
#include "pms/morphisms.hpp"
#include "pms/stream.hpp"
#include "pms/verify.hpp"
#include "pms/word.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace {

using namespace pms;

/// A word literal pins the alphabet unless it is a bare ".T".
bool rigid(const std::string& text) { return text != ".T"; }

std::pair<AddressWord, AddressWord> parse_word_pair(const std::string& a,
                                                    const std::string& b) {
    if (rigid(a)) {
        AddressWord wa = AddressWord::parse(a);
        return {wa, AddressWord::parse(b, rigid(b) ? std::nullopt
                                                   : std::optional<Arity>(wa.arity))};
    }
    if (rigid(b)) {
        AddressWord wb = AddressWord::parse(b);
        return {AddressWord::parse(a, wb.arity), wb};
    }
    return {AddressWord::parse(a), AddressWord::parse(b)};
}

int cmd_dist(const std::string& a, const std::string& b) {
    auto [wa, wb] = parse_word_pair(a, b);
    std::cout << word_distance(wa, wb).str() << "\n";
    return 0;
}

int cmd_fold(const std::string& a) {
    std::cout << fold_dyadic(AddressWord::parse(a, Arity::Two)).str() << "\n";
    return 0;
}

int cmd_equiv(const std::string& a, const std::string& b) {
    auto [wa, wb] = parse_word_pair(a, b);
    std::cout << (words_equivalent(wa, wb) ? "true" : "false") << "\n";
    return 0;
}

int cmd_approx(const std::string& name, const std::string& point, int depth) {
    const CoalgebraSpec& c = builtin_coalgebra(name);
    CarrierPoint x = c.parse_point(point);
    AddressWord w = coalgebra_iterate(c, x, depth);
    std::cout << "word " << w.str() << "\n";
    if (c.arity == Arity::Two)
        std::cout << "fold " << fold_dyadic(w).str() << "\n";
    else
        std::cout << "coords " << gasket_coords(w).str() << "\n";
    std::cout << "error<=" << Dyadic::half_pow(depth).str() << "\n";
    return 0;
}

int cmd_eval(const std::string& name, const std::string& word) {
    const AlgebraSpec& a = builtin_algebra(name);
    AddressWord w = AddressWord::parse(word, a.carrier.arity);
    std::cout << a.carrier.labels[algebra_fold(a, w)] << "\n";
    return 0;
}

VerifyCaps caps_for(const std::string& suite, int cap, int nmax, int samples,
                    int trials, std::uint64_t seed) {
    VerifyCaps caps;
    caps.samples = samples;
    caps.seed = seed;
    caps.trials = trials;
    if (nmax > 0) caps.n_max = std::min(nmax, 12);
    if (cap > 0) {
        if (suite == "metric-axioms" || suite == "oracle" || suite == "all") {
            caps.bi_depth = std::min(cap, 10);
            caps.tri_depth = std::min(cap, 5);
        }
        if (suite == "isometry-ck" || suite == "all")
            caps.fold_depth = std::min(cap, 10);
        if (suite == "cauchy" || suite == "all") caps.cauchy_depth = std::min(cap, 25);
        if (suite == "squares" || suite == "all") caps.square_depth = std::min(cap, 20);
        if (suite == "claims-ab" || suite == "lipschitz" || suite == "discontinuity")
            caps.n_max = std::min(cap, 12);
        if (suite == "functoriality") caps.trials = cap;
    }
    return caps;
}

int cmd_verify(const std::string& suite, const VerifyCaps& caps) {
    SuiteResult res = run_suite(suite, caps);
    std::vector<CheckLine> lines = res.lines;
    std::sort(lines.begin(), lines.end(),
              [](const CheckLine& a, const CheckLine& b) { return a.name < b.name; });
    int failed = 0;
    for (const auto& l : lines) {
        if (l.pass)
            std::cout << "PASS " << l.name << " (" << l.detail << ")\n";
        else {
            std::cout << "FAIL " << l.name << ": " << l.detail << "\n";
            ++failed;
        }
    }
    std::cout << (failed == 0 ? "OK" : "FAILED") << " " << lines.size() - failed << "/"
              << lines.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_table(const std::string& kind, int nmax, int samples, const std::string& csv) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!csv.empty()) {
        file.open(csv);
        if (!file) throw std::invalid_argument("cannot open CSV path: " + csv);
        os = &file;
    }
    if (kind == "lipschitz")
        write_lipschitz_csv(*os, nmax);
    else if (kind == "values")
        write_values_csv(*os, nmax, samples);
    else
        throw std::invalid_argument("table kind must be lipschitz or values");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distances, folds and mediating morphisms for the "
                 "interval and gasket tensor functors"};
    app.require_subcommand(1);

    std::string w1, w2, name, point, suite, kind, csv;
    int depth = 6, nmax = 10, samples = 8, trials = 1000, cap = 0;
    std::uint64_t seed = 20240817;

    auto* dist = app.add_subcommand("dist", "Exact distance between two address words");
    dist->add_option("word1", w1)->required();
    dist->add_option("word2", w2)->required();

    auto* fold = app.add_subcommand("fold", "Dyadic value of a bi-pointed word");
    fold->add_option("word", w1)->required();

    auto* equiv = app.add_subcommand("equiv", "Whether two words denote the same point");
    equiv->add_option("word1", w1)->required();
    equiv->add_option("word2", w2)->required();

    auto* approx =
        app.add_subcommand("approx", "Iterate a coalgebra to a depth-p truncation");
    approx->add_option("coalgebra", name)->required();
    approx->add_option("point", point)->required();
    approx->add_option("--depth", depth, "truncation depth")->check(CLI::Range(1, 28));

    auto* eval = app.add_subcommand("eval", "Fold a word through a builtin algebra");
    eval->add_option("algebra", name)->required();
    eval->add_option("word", w1)->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite)->required();
    verify->add_option("cap", cap, "per-suite depth/n cap");
    verify->add_option("--depth", cap);
    verify->add_option("--nmax", nmax);
    verify->add_option("--samples", samples)->check(CLI::Range(0, 15));
    verify->add_option("--trials", trials);
    verify->add_option("--seed", seed);

    auto* table = app.add_subcommand("table", "Emit a CSV value or ratio table");
    table->add_option("kind", kind, "lipschitz | values")->required();
    table->add_option("--nmax", nmax)->check(CLI::Range(1, 12));
    table->add_option("--samples", samples)->check(CLI::Range(0, 15));
    table->add_option("--csv", csv, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
        if (dist->parsed()) return cmd_dist(w1, w2);
        if (fold->parsed()) return cmd_fold(w1);
        if (equiv->parsed()) return cmd_equiv(w1, w2);
        if (approx->parsed()) return cmd_approx(name, point, depth);
        if (eval->parsed()) return cmd_eval(name, w1);
        if (verify->parsed())
            return cmd_verify(suite, caps_for(suite, cap, nmax, samples, trials, seed));
        if (table->parsed()) return cmd_table(kind, nmax, samples, csv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
