// kfl: exact-arithmetic toolkit for generalized k-Fibonacci-Lucas sequences,
// their circulant/skew-circulant matrices, singular pairs, and Zsigmondy sets.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>

#include "kfl/circulant.hpp"
#include "kfl/identities.hpp"
#include "kfl/polynomial.hpp"
#include "kfl/singular.hpp"
#include "kfl/zsigmondy.hpp"

using json = nlohmann::ordered_json;

namespace {

kfl::Rational parse_rat(const std::string& s) { return kfl::Rational::parse(s); }

json interval_json(const kfl::RootInterval& iv) {
    return json::array({iv.lo.str(), iv.hi.str()});
}

json rootset_json(const kfl::RootSet& rs) {
    json out;
    out["rational"] = json::array();
    for (const auto& r : rs.rational_roots) out["rational"].push_back(r.str());
    out["intervals"] = json::array();
    for (const auto& iv : rs.irrational_roots) out["intervals"].push_back(interval_json(iv));
    out["count"] = rs.count();
    return out;
}

kfl::MatrixKind parse_matrix_kind(const std::string& s) {
    if (s == "skew") return kfl::MatrixKind::SkewCirculant;
    if (s == "circ") return kfl::MatrixKind::Circulant;
    throw CLI::ValidationError("--kind must be skew or circ");
}

// Reproducible 64-bit LCG (Knuth constants) for grid sampling.
struct Lcg {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
};

kfl::Rational lcg_rational(Lcg& rng, const kfl::Rational& lo, const kfl::Rational& hi) {
    // Dyadic sample lo + (hi - lo) * u / 2^53, exact.
    std::uint64_t u = rng.next() >> 11;
    kfl::Rational frac(mpz_class(static_cast<unsigned long>(u)),
                       mpz_class(1) << 53);
    return lo + (hi - lo) * frac;
}

json zreport_json(const kfl::ZsigmondyReport& report) {
    json out;
    out["bound"] = report.bound;
    out["z_set"] = report.z_set;
    out["per_index"] = json::array();
    for (const auto& ir : report.per_index) {
        json e;
        e["index"] = ir.index;
        e["term"] = ir.term.get_str();
        e["zero_term"] = ir.zero_term;
        e["in_z"] = ir.in_z;
        e["fully_factored"] = ir.fully_factored;
        e["prime_factors"] = json::array();
        for (const auto& p : ir.prime_factors) e["prime_factors"].push_back(p.get_str());
        e["primitive_primes"] = json::array();
        for (const auto& p : ir.primitive_primes) e["primitive_primes"].push_back(p.get_str());
        e["primitive_cofactor"] = ir.primitive_cofactor.get_str();
        out["per_index"].push_back(std::move(e));
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact toolkit for generalized k-FL sequences"};
    app.require_subcommand(1);

    std::string k_str = "1", a_str = "1", b_str = "1";
    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--k", k_str, "k parameter (rational, e.g. 3/2)");
        cmd->add_option("--a", a_str, "a parameter (rational)");
        cmd->add_option("--b", b_str, "b parameter (rational)");
    };
    auto params = [&]() {
        return kfl::KflParams{parse_rat(k_str), parse_rat(a_str), parse_rat(b_str)};
    };

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "generate a sequence prefix");
    add_params(seq_cmd);
    std::string seq_kind = "kfl";
    unsigned long seq_n = 10;
    seq_cmd->add_option("--kind", seq_kind, "kfib, klucas, or kfl");
    seq_cmd->add_option("--n", seq_n, "last index to generate");

    // identity
    auto* id_cmd = app.add_subcommand("identity", "verify an identity at given parameters");
    add_params(id_cmd);
    std::string id_name;
    long id_n = 1, id_r = 0, id_m = 0;
    std::string id_p = "2";
    id_cmd->add_option("--id", id_name,
                       "catalan|cassini|docagne|sum_all|sum_even|sum_odd|"
                       "sum_alternating|binomial|livio|geometric")
        ->required();
    id_cmd->add_option("--n", id_n, "main index");
    id_cmd->add_option("--r", id_r, "secondary index (catalan)");
    id_cmd->add_option("--m", id_m, "secondary index (docagne)");
    id_cmd->add_option("--p", id_p, "rational p (livio)");

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "coefficient polynomial families");
    std::string poly_family = "F";
    unsigned long poly_n = 1;
    poly_cmd->add_option("--family", poly_family, "f, g, F, G, P, or Q")->required();
    poly_cmd->add_option("--n", poly_n, "index n");

    // exset
    auto* exset_cmd = app.add_subcommand("exset", "exceptional sets A_n, B_n, C_n");
    std::string exset_kind = "A";
    unsigned long exset_n = 1;
    std::string precision_str = "1/4294967296";
    exset_cmd->add_option("--kind", exset_kind, "A, B, or C")->required();
    exset_cmd->add_option("--n", exset_n, "level n")->required();
    exset_cmd->add_option("--precision", precision_str, "isolating interval width");

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "associated matrix analysis");
    add_params(matrix_cmd);
    std::string matrix_kind = "circ", matrix_what = "all", matrix_dump;
    unsigned long matrix_n = 3;
    double matrix_tol = 1e-9;
    matrix_cmd->add_option("--kind", matrix_kind, "skew or circ");
    matrix_cmd->add_option("--n", matrix_n, "matrix size");
    matrix_cmd->add_option("--what", matrix_what, "det, rank, verdict, spectral, or all");
    matrix_cmd->add_option("--dump", matrix_dump, "write the full matrix to a CSV file");
    matrix_cmd->add_option("--tol", matrix_tol, "spectral probe tolerance");

    // pair
    auto* pair_cmd = app.add_subcommand("pair", "singular k-FL pair");
    int pair_type = 1;
    unsigned long pair_n = 2;
    std::string pair_k = "2";
    pair_cmd->add_option("--type", pair_type, "1, 2, or 3")->required();
    pair_cmd->add_option("--n", pair_n, "level")->required();
    pair_cmd->add_option("--k", pair_k, "rational k")->required();

    // variety
    auto* variety_cmd = app.add_subcommand("variety", "determinantal variety rank scan");
    std::string variety_kind = "skew", variety_k, variety_grid, variety_format = "json";
    unsigned long variety_n = 3;
    std::uint64_t variety_seed = 1;
    variety_cmd->add_option("--kind", variety_kind, "skew or circ");
    variety_cmd->add_option("--n", variety_n, "matrix size");
    variety_cmd->add_option("--k", variety_k, "single rational k");
    variety_cmd->add_option("--grid", variety_grid, "lo:hi:count random rational grid");
    variety_cmd->add_option("--seed", variety_seed, "grid sampling seed");
    variety_cmd->add_option("--format", variety_format, "json or csv (histogram)");

    // zsig
    auto* zsig_cmd = app.add_subcommand("zsig", "Zsigmondy set of an integer sequence");
    std::string zsig_seq = "fib", zsig_convention = "plain";
    unsigned long zsig_bound = 30;
    zsig_cmd->add_option("--seq", zsig_seq, "fib, kfib:K, klucas:K, or file:PATH");
    zsig_cmd->add_option("--bound", zsig_bound, "last index to analyze");
    zsig_cmd->add_option("--convention", zsig_convention, "plain or carmichael");

    // construct
    auto* construct_cmd =
        app.add_subcommand("construct", "sequence with a large Zsigmondy set");
    unsigned long construct_k = 1, construct_target = 2, construct_r = 0;
    construct_cmd->add_option("--k", construct_k, "positive integer k");
    construct_cmd->add_option("--N", construct_target, "requested lower bound on |Z|");
    construct_cmd->add_option("--r", construct_r, "override the pivot index r");

    CLI11_PARSE(app, argc, argv);
    json out;

    if (*seq_cmd) {
        kfl::SeqKind kind;
        if (seq_kind == "kfib") kind = kfl::SeqKind::KFib;
        else if (seq_kind == "klucas") kind = kfl::SeqKind::KLucas;
        else if (seq_kind == "kfl") kind = kfl::SeqKind::KFL;
        else throw CLI::ValidationError("--kind must be kfib, klucas, or kfl");
        auto prefix = kfl::gen_prefix(params(), kind, seq_n);
        out = json::array();
        for (const auto& t : prefix.terms) out.push_back(t.str());
    } else if (*id_cmd) {
        kfl::KflParams p = params();
        if (id_name == "geometric") {
            out["holds"] = kfl::check_geometric(p);
        } else {
            kfl::IdentityReport rep;
            if (id_name == "catalan") rep = kfl::check_catalan(p, id_n, id_r);
            else if (id_name == "cassini") rep = kfl::check_cassini(p, id_n);
            else if (id_name == "docagne") rep = kfl::check_docagne(p, id_m, id_n);
            else if (id_name == "sum_all") rep = kfl::check_sum(kfl::SumKind::All, p, id_n);
            else if (id_name == "sum_even") rep = kfl::check_sum(kfl::SumKind::Even, p, id_n);
            else if (id_name == "sum_odd") rep = kfl::check_sum(kfl::SumKind::Odd, p, id_n);
            else if (id_name == "sum_alternating")
                rep = kfl::check_sum(kfl::SumKind::Alternating, p, id_n);
            else if (id_name == "binomial") rep = kfl::check_binomial(p, id_n);
            else if (id_name == "livio") rep = kfl::check_livio(p, parse_rat(id_p), id_n);
            else throw CLI::ValidationError("unknown identity id: " + id_name);
            out["id"] = kfl::identity_name(rep.id);
            out["lhs"] = rep.lhs.str();
            out["rhs"] = rep.rhs.str();
            out["residual"] = rep.residual.str();
            out["holds"] = rep.holds();
        }
    } else if (*poly_cmd) {
        kfl::IntPoly poly;
        if (poly_family == "f") poly = kfl::fg_pair(poly_n).first;
        else if (poly_family == "g") poly = kfl::fg_pair(poly_n).second;
        else {
            auto fam = kfl::fgpq(poly_n);
            if (poly_family == "F") poly = fam.f;
            else if (poly_family == "G") poly = fam.g;
            else if (poly_family == "P") poly = fam.p;
            else if (poly_family == "Q") poly = fam.q;
            else throw CLI::ValidationError("--family must be one of f, g, F, G, P, Q");
        }
        out["family"] = poly_family;
        out["n"] = poly_n;
        out["degree"] = poly.degree();
        out["coefficients"] = json::array();
        for (const auto& c : poly.coeffs()) out["coefficients"].push_back(c.get_str());
        out["display"] = poly.str();
    } else if (*exset_cmd) {
        kfl::ExceptionalKind kind;
        if (exset_kind == "A") kind = kfl::ExceptionalKind::A;
        else if (exset_kind == "B") kind = kfl::ExceptionalKind::B;
        else if (exset_kind == "C") kind = kfl::ExceptionalKind::C;
        else throw CLI::ValidationError("--kind must be A, B, or C");
        auto rs = kfl::exceptional_set(kind, exset_n, parse_rat(precision_str));
        out = rootset_json(rs);
        out["kind"] = exset_kind;
        out["n"] = exset_n;
    } else if (*matrix_cmd) {
        auto m = kfl::KflMatrix::build(parse_matrix_kind(matrix_kind), params(), matrix_n);
        if (!matrix_dump.empty()) {
            std::ofstream csv(matrix_dump);
            for (std::size_t i = 0; i < m.n(); ++i) {
                for (std::size_t j = 0; j < m.n(); ++j)
                    csv << m.entry(i, j).str() << (j + 1 < m.n() ? "," : "\n");
            }
        }
        out["kind"] = matrix_kind;
        out["n"] = matrix_n;
        if (matrix_what == "det" || matrix_what == "all")
            out["det"] = kfl::det_exact(m).str();
        if (matrix_what == "rank" || matrix_what == "all")
            out["rank"] = kfl::rank_exact(m);
        if (matrix_what == "verdict" || matrix_what == "all") {
            auto v = kfl::theorem_verdict(m);
            out["verdict"] = kfl::verdict_name(v.verdict);
            out["reason"] = v.reason;
        }
        if (matrix_what == "spectral" || matrix_what == "all")
            out["spectral"] = kfl::spectral_check(m, matrix_tol);
    } else if (*pair_cmd) {
        if (pair_type < 1 || pair_type > 3)
            throw CLI::ValidationError("--type must be 1, 2, or 3");
        auto pr = kfl::singular_pair(static_cast<kfl::PairType>(pair_type), pair_n,
                                     parse_rat(pair_k));
        out["type"] = pair_type;
        out["n"] = pair_n;
        out["k"] = pr.k.str();
        out["a"] = pr.a.str();
        out["b"] = pr.b.str();
        out["discriminant"] = kfl::cubic_discriminant(pr.a, pr.b).str();
    } else if (*variety_cmd) {
        auto kind = parse_matrix_kind(variety_kind);
        std::vector<kfl::Rational> ks;
        if (!variety_k.empty()) {
            ks.push_back(parse_rat(variety_k));
        } else if (!variety_grid.empty()) {
            auto c1 = variety_grid.find(':');
            auto c2 = variety_grid.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw CLI::ValidationError("--grid must be lo:hi:count");
            kfl::Rational lo = parse_rat(variety_grid.substr(0, c1));
            kfl::Rational hi = parse_rat(variety_grid.substr(c1 + 1, c2 - c1 - 1));
            unsigned long count = std::stoul(variety_grid.substr(c2 + 1));
            Lcg rng{variety_seed};
            for (unsigned long i = 0; i < count; ++i) ks.push_back(lcg_rational(rng, lo, hi));
        } else {
            throw CLI::ValidationError("variety requires --k or --grid");
        }
        auto report = kfl::variety_scan(kind, variety_n, ks);
        if (variety_format == "csv") {
            std::string csv = "rank,count\n";
            for (const auto& [rank, count] : report.histogram)
                csv += std::to_string(rank) + "," + std::to_string(count) + "\n";
            std::cout << csv;
            return 0;
        }
        out["kind"] = variety_kind;
        out["n"] = variety_n;
        out["histogram"] = json::object();
        for (const auto& [rank, count] : report.histogram)
            out["histogram"][std::to_string(rank)] = count;
        out["skipped"] = json::array();
        for (const auto& issue : report.skipped)
            out["skipped"].push_back({{"k", issue.k.str()}, {"reason", issue.reason}});
        out["below_generic"] = json::array();
        for (const auto& pt : report.below_generic)
            out["below_generic"].push_back(
                {{"k", pt.k.str()}, {"a", pt.a.str()}, {"b", pt.b.str()}, {"rank", pt.rank}});
    } else if (*zsig_cmd) {
        kfl::IntSeqPrefix seq;
        kfl::ZsigmondyOptions options;
        options.carmichael = (zsig_convention == "carmichael");
        auto kfib_like = [&](const std::string& spec, kfl::SeqKind kind, long k) {
            kfl::KflParams p{kfl::Rational(k), kfl::Rational(1), kfl::Rational(0)};
            if (kind == kfl::SeqKind::KLucas) p = {kfl::Rational(k), kfl::Rational(0), kfl::Rational(1)};
            seq = kfl::integer_prefix(p, kind, zsig_bound, spec);
            options.discriminant = mpz_class(k) * k + 4;
        };
        if (zsig_seq == "fib") {
            kfib_like("fib", kfl::SeqKind::KFib, 1);
        } else if (zsig_seq.rfind("kfib:", 0) == 0) {
            kfib_like(zsig_seq, kfl::SeqKind::KFib, std::stol(zsig_seq.substr(5)));
        } else if (zsig_seq.rfind("klucas:", 0) == 0) {
            kfib_like(zsig_seq, kfl::SeqKind::KLucas, std::stol(zsig_seq.substr(7)));
        } else if (zsig_seq.rfind("file:", 0) == 0) {
            std::ifstream in(zsig_seq.substr(5));
            if (!in) throw kfl::Error(kfl::ErrorCode::BadSequence,
                                      "cannot open " + zsig_seq.substr(5));
            seq.label = zsig_seq;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                mpz_class v;
                if (v.set_str(line, 10) != 0)
                    throw kfl::Error(kfl::ErrorCode::BadSequence,
                                     "malformed integer line: " + line);
                seq.terms.push_back(std::move(v));
            }
            if (zsig_bound >= seq.terms.size())
                throw kfl::Error(kfl::ErrorCode::BadIndex, "bound beyond the file contents");
        } else {
            throw CLI::ValidationError("--seq must be fib, kfib:K, klucas:K, or file:PATH");
        }
        auto report = kfl::zsigmondy_set(seq, zsig_bound, options);
        out = zreport_json(report);
        out["sequence"] = seq.label;
        out["convention"] = zsig_convention;
    } else if (*construct_cmd) {
        auto c = kfl::construct_high_z(construct_k, construct_target, construct_r);
        auto v = kfl::verify_high_z(c, 2 * c.r);
        out["k"] = c.k;
        out["N"] = c.target;
        out["r"] = c.r;
        out["sigma0_r"] = c.sigma0_r;
        out["a"] = c.a.str();
        out["b"] = c.b.str();
        out["predicted"] = v.predicted;
        out["predicted_hit"] = v.predicted_hit;
        out["z_count"] = v.z_count;
        out["verification"] = zreport_json(v.report);
    }

    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kfl::Error& e) {
        if (e.code() == kfl::ErrorCode::InternalInconsistency) {
            std::cerr << "internal inconsistency: " << e.what() << "\n";
            return 1;
        }
        json err{{"error_code", e.code_name()}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
