#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncmops/fock.hpp"
#include "ncmops/hankel.hpp"
#include "ncmops/io.hpp"
#include "ncmops/oracle.hpp"

using namespace ncmops;

namespace {

constexpr unsigned long long kDimCap = 1ull << 62;

// Thrown when a run would build a matrix larger than the configured ceiling.
struct CeilingExceeded {
    unsigned long long dim;
    unsigned long long ceiling;
};

struct Options {
    std::string input;
    std::string out;
    std::string target;
    std::string a_csv;
    std::string b_csv;
    int degree = -1;
    int depth = -1;
    unsigned long long max_dim = 0;  // 0 = not given (valid values are >= 2)
    bool verify = false;
    bool fock = false;
};

unsigned long long saturating_pow(int base, int exp) {
    unsigned long long result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result >= kDimCap / static_cast<unsigned long long>(base)) return kDimCap;
        result *= static_cast<unsigned long long>(base);
    }
    return result;
}

unsigned long long resolve_ceiling(const Options& opt) {
    if (opt.max_dim != 0) return opt.max_dim;  // range-checked by the parser
    if (const char* env = std::getenv("NCMOPS_MAX_DIM")) {
        const std::string text(env);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("NCMOPS_MAX_DIM must be a positive integer, got '" + text + "'");
        unsigned long long value = 0;
        for (char ch : text)
            value = value >= kDimCap / 10 ? kDimCap : value * 10 + static_cast<unsigned long long>(ch - '0');
        if (value < 2) throw ParseError("NCMOPS_MAX_DIM must be >= 2, got '" + text + "'");
        return value;
    }
    return 4096;
}

void guard_dim(unsigned long long dim, unsigned long long ceiling) {
    if (dim > ceiling) throw CeilingExceeded{dim, ceiling};
}

void emit(const Json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

Json witness_json(const OrthogonalityWitness& w) {
    Json j;
    j["u"] = word_string(w.u);
    j["w"] = word_string(w.w);
    j["inner"] = fraction_string(w.value);
    return j;
}

void require_even_degree(int degree) {
    if (degree % 2 != 0)
        throw ParseError("--degree must be even so the emitted table carries a full Gram matrix");
}

// Parse (exit 2), ceiling (exit 5), validate (exit 2), in that order; the
// ceiling covers the Gram matrix that validation itself builds.
TableState load_table_state(const std::string& path, unsigned long long ceiling) {
    MomentTable table = moment_table_from_json(load_json_file(path));
    guard_dim(count_words_up_to(table.d, table.max_degree / 2), ceiling);
    const StateCheckReport report = check_state(table);
    if (!report.ok) throw ParseError("invalid state: " + report.violation);
    return TableState(std::move(table));
}

void require_inner_products(const State& s, int degree) {
    if (2 * degree > s.bound())
        throw BoundError("degree " + std::to_string(degree) + " needs moments of degree " +
                         std::to_string(2 * degree) + ", table holds " + std::to_string(s.bound()));
}

int cmd_check(const Options& opt) {
    const unsigned long long ceiling = resolve_ceiling(opt);
    const TableState s = load_table_state(opt.input, ceiling);
    require_inner_products(s, opt.degree);
    const MopsResult result = has_mops(s, opt.degree);
    Json doc;
    doc["has_mops"] = result.has_mops;
    if (!result.has_mops) doc["witness"] = witness_json(*result.witness);
    emit(doc, opt.out);
    return result.has_mops ? 0 : 1;
}

int cmd_orthogonalize(const Options& opt) {
    const unsigned long long ceiling = resolve_ceiling(opt);
    const TableState s = load_table_state(opt.input, ceiling);
    require_inner_products(s, opt.degree);
    const MopsResult result = has_mops(s, opt.degree);
    Json doc;
    doc["family"] = family_to_json(result.family);
    if (result.has_mops) {
        doc["coefficients"] = coefficients_to_json(extract_recursion(s, result.family, opt.degree));
        emit(doc, opt.out);
        return 0;
    }
    doc["note"] = "no recursion coefficients: the state admits no monic orthogonal system at this degree";
    doc["witness"] = witness_json(*result.witness);
    emit(doc, opt.out);
    return 1;
}

int cmd_hankel(const Options& opt) {
    const unsigned long long ceiling = resolve_ceiling(opt);
    const TableState s = load_table_state(opt.input, ceiling);
    if (opt.degree >= 1) guard_dim(count_words_up_to(s.alphabet(), opt.degree - 1) + 1, ceiling);
    require_inner_products(s, opt.degree);
    const MonicFamily family = hankel_family(s, opt.degree);
    Json doc;
    doc["d"] = s.alphabet();
    doc["degree"] = opt.degree;
    Json frak = Json::object();
    for (int m = 0; m <= opt.degree; ++m) frak[std::to_string(m)] = fraction_string(basis_det(s, m));
    doc["frak_h"] = std::move(frak);
    Json h = Json::object();
    for (const Word& u : enumerate_words(s.alphabet(), opt.degree))
        h[word_string(u)] = fraction_string(frame_det(s, u));
    doc["h"] = std::move(h);
    doc["family"] = family_to_json(family);
    emit(doc, opt.out);
    return 0;
}

int cmd_fock(const Options& opt) {
    const unsigned long long ceiling = resolve_ceiling(opt);
    FockData data = fock_data_from_json(load_json_file(opt.input));
    guard_dim(saturating_pow(data.d, data.depth), ceiling);
    guard_dim(count_words_up_to(data.d, opt.degree / 2), ceiling);
    require_even_degree(opt.degree);
    const FockState fs(std::move(data));
    if (opt.degree > fs.bound())
        throw BoundError("degree " + std::to_string(opt.degree) + " exceeds the state bound " +
                         std::to_string(fs.bound()) + " carried by depth " + std::to_string(fs.data().depth));
    emit(moment_table_to_json(table_from_state(fs, opt.degree)), opt.out);
    return 0;
}

int cmd_extract(const Options& opt) {
    const unsigned long long ceiling = resolve_ceiling(opt);
    MomentTable table = moment_table_from_json(load_json_file(opt.input));
    guard_dim(std::max(count_words_up_to(table.d, table.max_degree / 2),
                       saturating_pow(table.d, opt.depth)),
              ceiling);
    const StateCheckReport report = check_state(table);
    if (!report.ok) throw ParseError("invalid state: " + report.violation);
    const TableState s(std::move(table));
    if (2 * opt.depth + 1 > s.bound())
        throw BoundError("depth " + std::to_string(opt.depth) + " needs moments of degree " +
                         std::to_string(2 * opt.depth + 1) + ", table holds " + std::to_string(s.bound()));
    const MopsResult result = has_mops(s, opt.depth);
    if (!result.has_mops) {
        Json doc;
        doc["has_mops"] = false;
        doc["witness"] = witness_json(*result.witness);
        emit(doc, opt.out);
        return 1;
    }
    emit(fock_data_to_json(extract_fock_data(s, result.family, opt.depth)), opt.out);
    return 0;
}

int cmd_roundtrip(const Options& opt) {
    const unsigned long long ceiling = resolve_ceiling(opt);
    FockData data = fock_data_from_json(load_json_file(opt.input));
    guard_dim(saturating_pow(data.d, data.depth), ceiling);
    const FockState fs(std::move(data));
    const int depth = opt.depth >= 0 ? opt.depth : fs.data().depth;
    if (depth > fs.data().depth)
        throw BoundError("requested depth " + std::to_string(depth) + " exceeds the data depth " +
                         std::to_string(fs.data().depth));
    const MonicFamily family = gram_schmidt(fs, depth);
    const FockState regenerated(extract_fock_data(fs, family, depth));
    Json doc;
    for (const Word& w : enumerate_words(fs.alphabet(), 2 * depth + 1)) {
        const Rat original = fs.moment(w);
        const Rat rebuilt = regenerated.moment(w);
        if (original != rebuilt) {
            doc["match"] = false;
            doc["word"] = word_string(w);
            doc["original"] = fraction_string(original);
            doc["regenerated"] = fraction_string(rebuilt);
            emit(doc, opt.out);
            return 1;
        }
    }
    doc["match"] = true;
    if (opt.verify) {
        const MonicFamily reference = dense_orthogonalize(fs, depth);
        for (const Word& u : enumerate_words(fs.alphabet(), depth)) {
            const NcPolynomial diff = reference.poly(u) - family.poly(u);
            if (seminorm_sq(fs, diff) != 0) {
                doc["match"] = false;
                doc["note"] = "reference orthogonalization disagrees in L2";
                doc["word"] = word_string(u);
                emit(doc, opt.out);
                return 1;
            }
        }
        doc["verified"] = true;
    }
    emit(doc, opt.out);
    return 0;
}

std::vector<Rat> parse_rational_list(const std::string& csv, const std::string& flag) {
    std::vector<Rat> values;
    if (csv.empty()) return values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        const std::string piece = csv.substr(start, comma == std::string::npos ? comma : comma - start);
        try {
            values.push_back(parse_rational(piece));
        } catch (const ParseError&) {
            throw ParseError("bad rational '" + piece + "' in " + flag);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

// Fock data whose weights are constant per level and whose preservation
// matrices are scalar multiples of the identity per level.
FockData scalar_fock_data(int d, int depth, const std::vector<Rat>& level_weight,
                          const std::vector<Rat>& level_diag) {
    FockData data{d, depth, {}, {}};
    for (int k = 1; k <= depth; ++k) {
        std::map<Word, Rat> level;
        for (const Word& w : words_of_length(d, k)) level.emplace(w, level_weight[static_cast<std::size_t>(k) - 1]);
        data.weights.push_back(std::move(level));
    }
    for (int i = 1; i <= d; ++i) {
        std::vector<RatMatrix> matrices;
        std::size_t dim = 1;
        for (int k = 0; k <= depth; ++k) {
            RatMatrix t(dim, dim);
            for (std::size_t r = 0; r < dim; ++r) t.at(r, r) = level_diag[static_cast<std::size_t>(k)];
            matrices.push_back(std::move(t));
            dim *= static_cast<std::size_t>(d);
        }
        data.preservation.push_back(std::move(matrices));
    }
    return data;
}

int emit_scalar_target(const Options& opt, int d, int table_degree_default, int fock_depth_default,
                       const std::vector<Rat>& b, const std::vector<Rat>& a, unsigned long long ceiling) {
    if (opt.fock) {
        const int depth = opt.depth >= 0 ? opt.depth : fock_depth_default;
        if (static_cast<std::size_t>(depth) > b.size())
            throw BoundError("depth " + std::to_string(depth) + " exceeds the available recursion data");
        guard_dim(saturating_pow(d, depth), ceiling);
        emit(fock_data_to_json(scalar_fock_data(d, depth, b, a)), opt.out);
        return 0;
    }
    const int degree = opt.degree >= 0 ? opt.degree : table_degree_default;
    require_even_degree(degree);
    const int depth = degree / 2;
    if (static_cast<std::size_t>(depth) > b.size())
        throw BoundError("degree " + std::to_string(degree) + " exceeds the available recursion data");
    guard_dim(std::max(saturating_pow(d, depth), count_words_up_to(d, depth)), ceiling);
    const FockState fs(scalar_fock_data(d, depth, b, a));
    emit(moment_table_to_json(table_from_state(fs, degree)), opt.out);
    return 0;
}

int cmd_gen(const Options& opt) {
    const unsigned long long ceiling = resolve_ceiling(opt);
    if (opt.target != "jacobi" && (!opt.a_csv.empty() || !opt.b_csv.empty()))
        throw ParseError("--a/--b only apply to the 'jacobi' target");
    if (opt.target == "catalan" || opt.target == "free-semicircular-d2") {
        const int d = opt.target == "catalan" ? 1 : 2;
        const int table_default = opt.target == "catalan" ? 8 : 6;
        const int fock_default = opt.target == "catalan" ? 4 : 3;
        const int levels = std::max({opt.depth, (std::max(opt.degree, 0) + 1) / 2,
                                     std::max(table_default / 2, fock_default)});
        const std::vector<Rat> b(static_cast<std::size_t>(levels), Rat(1));
        const std::vector<Rat> a(static_cast<std::size_t>(levels) + 1, Rat(0));
        return emit_scalar_target(opt, d, table_default, fock_default, b, a, ceiling);
    }
    if (opt.target == "gaussian-duplicated") {
        if (opt.fock) {
            std::cerr << "error: the duplicated-variable Gaussian state is not orthogonalizable, "
                         "so it carries no Fock data\n";
            return 1;
        }
        const int degree = opt.degree >= 0 ? opt.degree : 4;
        require_even_degree(degree);
        guard_dim(count_words_up_to(2, degree / 2), ceiling);
        MomentTable table;
        table.d = 2;
        table.max_degree = degree;
        for (const Word& w : enumerate_words(2, degree)) {
            Rat value(0);
            if (w.length() % 2 == 0) {
                value = 1;
                for (int t = 3; t < w.length(); t += 2) value *= t;  // (m-1)!! pairings
            }
            table.moments.emplace(w, std::move(value));
        }
        emit(moment_table_to_json(table), opt.out);
        return 0;
    }
    if (opt.target == "jacobi") {
        const std::vector<Rat> a = parse_rational_list(opt.a_csv, "--a");
        const std::vector<Rat> b = parse_rational_list(opt.b_csv, "--b");
        if (a.empty()) throw ParseError("the 'jacobi' target needs --a (and --b, one entry shorter)");
        if (a.size() != b.size() + 1)
            throw ParseError("--a must have exactly one more entry than --b, got " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
        for (const Rat& w : b)
            if (w < 0) throw ParseError("--b entries must be nonnegative, got " + fraction_string(w));
        const int max_depth = static_cast<int>(b.size());
        Options scoped = opt;
        if (scoped.fock && scoped.depth < 0) scoped.depth = max_depth;
        return emit_scalar_target(scoped, 1, 2 * max_depth, max_depth, b, a, ceiling);
    }
    throw ParseError("unknown target '" + opt.target +
                     "'; expected catalan, free-semicircular-d2, gaussian-duplicated, or jacobi");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monic orthogonal polynomial systems for states on noncommutative polynomials"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "write the JSON report to this file instead of stdout");
        sub->add_option("--max-dim", opt.max_dim,
                        "largest matrix dimension the run may build (default: env NCMOPS_MAX_DIM or 4096)")
            ->check(CLI::Range(2ull, kDimCap));
    };
    auto add_input = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", opt.input, what)->required();
    };

    CLI::App* check = app.add_subcommand("check", "decide whether the state admits a monic orthogonal system");
    add_input(check, "moment table JSON file");
    check->add_option("-n,--degree", opt.degree, "degree bound of the decision")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(check);

    CLI::App* ortho = app.add_subcommand("orthogonalize", "emit the monic family and, when orthogonal, its recursion coefficients");
    add_input(ortho, "moment table JSON file");
    ortho->add_option("-n,--degree", opt.degree, "degree bound of the family")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(ortho);

    CLI::App* hankel = app.add_subcommand("hankel", "emit frame determinants and the determinantal monic family");
    add_input(hankel, "moment table JSON file");
    hankel->add_option("-n,--degree", opt.degree, "degree bound of the family")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(hankel);

    CLI::App* fock = app.add_subcommand("fock", "evaluate the state carried by Fock data into a moment table");
    add_input(fock, "Fock data JSON file");
    fock->add_option("-n,--degree", opt.degree, "max degree of the emitted table (even, <= 2*depth+1)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(fock);

    CLI::App* extract = app.add_subcommand("extract", "read Fock data off an orthogonalizable moment table");
    add_input(extract, "moment table JSON file");
    extract->add_option("-K,--depth", opt.depth, "depth of the extracted data (needs moments to 2K+1)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    add_common(extract);

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "regenerate Fock data from its own state and compare moments");
    add_input(roundtrip, "Fock data JSON file");
    roundtrip->add_option("-K,--depth", opt.depth, "extraction depth (default: the data depth)")
        ->check(CLI::NonNegativeNumber);
    roundtrip->add_flag("--verify", opt.verify, "also compare against the dense reference orthogonalization");
    add_common(roundtrip);

    CLI::App* gen = app.add_subcommand("gen", "emit a built-in example state (or its Fock data with --fock)");
    gen->add_option("target", opt.target,
                    "one of: catalan, free-semicircular-d2, gaussian-duplicated, jacobi")
        ->required();
    gen->add_option("-n,--degree", opt.degree, "max degree of the emitted table (even)")
        ->check(CLI::NonNegativeNumber);
    gen->add_option("-K,--depth", opt.depth, "depth of the emitted Fock data (with --fock)")
        ->check(CLI::NonNegativeNumber);
    gen->add_flag("--fock", opt.fock, "emit Fock data instead of a moment table");
    gen->add_option("--a", opt.a_csv, "jacobi diagonal a_0..a_K, comma-separated rationals");
    gen->add_option("--b", opt.b_csv, "jacobi off-diagonal b_1..b_K, comma-separated nonnegative rationals");
    add_common(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return cmd_check(opt);
        if (ortho->parsed()) return cmd_orthogonalize(opt);
        if (hankel->parsed()) return cmd_hankel(opt);
        if (fock->parsed()) return cmd_fock(opt);
        if (extract->parsed()) return cmd_extract(opt);
        if (roundtrip->parsed()) return cmd_roundtrip(opt);
        if (gen->parsed()) return cmd_gen(opt);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const CeilingExceeded& e) {
        std::cerr << "error: the run needs a matrix of dimension " << e.dim << ", over the ceiling "
                  << e.ceiling << " (raise with --max-dim or NCMOPS_MAX_DIM)\n";
        return 5;
    } catch (const NotOrthogonalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotFaithfulError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ncmops::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
