#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gdeck/bounds.hpp"
#include "gdeck/constructions.hpp"
#include "gdeck/deck.hpp"
#include "gdeck/error.hpp"
#include "gdeck/naive.hpp"
#include "gdeck/search.hpp"
#include "gdeck/wildcard.hpp"
#include "report_json.hpp"

namespace gdeck::cli {

namespace {

struct Common {
    bool json = false;
};

struct DeckArgs {
    std::vector<std::string> inputs;
    int s = 2;
    int k = 2;
    std::string mode = "exact";
    std::vector<std::uint64_t> primes;
    std::string puncture = "NONE";
    bool exact_only = false;
    std::size_t depth = 1;
};

struct ConstructArgs {
    int s = 2;
    int k = 1;
    bool trimmed = false;
    std::string z;
    std::vector<std::string> fills;
};

struct SearchArgs {
    int s = 2;
    int k = 2;
    int k1 = 0;
    int k2 = 0;
    std::size_t n_min = 0;
    std::size_t n_max = 24;
    unsigned workers = 1;
    std::size_t max_witnesses = 8;
    std::string checkpoint;
    bool quiet = false;
};

struct WildcardArgs {
    std::vector<std::string> inputs;
    int r = -1;
    int k = -1;
    int k1 = 0;
    int k2 = 0;
    std::string x, y, p, q;
    int sigma = 0;
};

struct BoundsArgs {
    std::string formula = "best";
    int k = 0;
    int s = 2;
    int k1 = 0;
    int k2 = 0;
    int from = 2;
    int to = 33;
};

struct OracleArgs {
    std::vector<std::string> inputs;
    int s = 2;
    int k = 2;
    std::size_t n = 0;
    std::string kind = "full";
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Positional strings may be given inline or as @path; a file contributes
// one string per nonblank line, '#' starts a comment line.
std::vector<std::string> expand_inputs(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& a : raw) {
        if (a.empty() || a[0] != '@') {
            out.push_back(a);
            continue;
        }
        std::ifstream in(a.substr(1));
        if (!in) throw UsageError("cannot open input file '" + a.substr(1) + "'");
        std::string line;
        while (std::getline(in, line)) {
            const auto b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos || line[b] == '#') continue;
            const auto e = line.find_last_not_of(" \t\r");
            out.push_back(line.substr(b, e - b + 1));
        }
    }
    return out;
}

std::vector<std::string> need_inputs(const std::vector<std::string>& raw, std::size_t count, const char* what) {
    auto in = expand_inputs(raw);
    if (in.size() != count) {
        throw UsageError(std::string(what) + " expects " + std::to_string(count) + " input string(s), got " +
                         std::to_string(in.size()));
    }
    return in;
}

CountMode make_mode(const std::string& name, const std::vector<std::uint64_t>& primes) {
    if (name == "exact") {
        if (!primes.empty()) throw UsageError("--primes only applies to --mode fingerprint");
        return CountMode::exact();
    }
    if (name == "fingerprint") return primes.empty() ? CountMode::fingerprint_default() : CountMode::fingerprint(primes);
    throw UsageError("unknown --mode '" + name + "' (expected exact or fingerprint)");
}

const char* tf(bool b) { return b ? "true" : "false"; }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------- deck

int cmd_deck(const DeckArgs& a, const Common& c, std::ostream& out) {
    const auto in = need_inputs(a.inputs, 1, "deck");
    const GapParams params(a.s, a.k);
    const auto mode = make_mode(a.mode, a.primes);
    const auto x = puncture(parse_binary(in[0]), parse_puncture(a.puncture));
    const auto sig = signature(x, params, mode);
    if (c.json) {
        emit(out, to_json(sig));
        return kOk;
    }
    out << "# signature s=" << a.s << " k=" << a.k << " n=" << x.size() << " mode=" << mode.name() << '\n';
    if (mode.is_exact()) {
        for (const auto& e : enumerate_deck(x, params)) out << e.pattern.str() << '\t' << e.multiplicity << '\n';
    } else {
        for (std::size_t i = 0; i < sig.patterns(); ++i) {
            out << pattern_string(i).str();
            for (std::size_t lane = 0; lane < sig.lanes(); ++lane) out << '\t' << sig.count(i, lane);
            out << '\n';
        }
    }
    return kOk;
}

int cmd_equal(const DeckArgs& a, const Common& c, std::ostream& out) {
    const auto in = need_inputs(a.inputs, 2, "equal");
    const GapParams params(a.s, a.k);
    const auto mode = make_mode(a.mode, a.primes);
    const auto x = parse_binary(in[0]);
    const auto y = parse_binary(in[1]);
    const auto sx = signature(x, params, mode);
    const auto sy = signature(y, params, mode);
    const bool eq = a.exact_only ? sx.slice_equal(sy, a.k) : sx == sy;
    if (c.json) {
        emit(out, Json{{"schema", kSchema},
                       {"record", "equal"},
                       {"relation", a.exact_only ? "EXACT_D" : "FULL_B"},
                       {"params", Json{{"s", a.s}, {"k", a.k}}},
                       {"mode", mode.name()},
                       {"x", x.str()},
                       {"y", y.str()},
                       {"equal", eq}});
    } else {
        out << tf(eq) << '\n';
    }
    return eq ? kOk : kFalse;
}

int cmd_eq7(const DeckArgs& a, const Common& c, std::ostream& out) {
    const auto in = need_inputs(a.inputs, 2, "eq7");
    const auto r = verify_eq7_deep(parse_binary(in[0]), parse_binary(in[1]), GapParams(a.s, a.k), a.depth,
                                   make_mode(a.mode, a.primes));
    if (c.json) {
        auto j = to_json(r);
        j["puncture_depth"] = a.depth;
        emit(out, j);
    } else {
        out << "plain_equal=" << tf(r.plain_equal) << '\n'
            << "lr_equal=" << tf(r.lr_equal) << '\n'
            << "l_equal=" << tf(r.l_equal) << '\n'
            << "r_equal=" << tf(r.r_equal) << '\n';
    }
    return r.all() ? kOk : kFalse;
}

// ------------------------------------------------------------ construct

void emit_pair(const ConstructionPair& p, const Common& c, std::ostream& out) {
    if (c.json) {
        emit(out, to_json(p));
        return;
    }
    auto meta = to_json(p);
    meta.erase("x");
    meta.erase("y");
    out << p.x.str() << '\n' << p.y.str() << '\n' << meta.dump() << '\n';
}

int cmd_construct(const std::string& which, const ConstructArgs& a, const Common& c, std::ostream& out) {
    if (which == "classical") {
        emit_pair(classical_mt(a.k), c, out);
    } else if (which == "padded") {
        emit_pair(a.trimmed ? padded_mt_trimmed(a.k) : padded_mt(a.k), c, out);
    } else if (which == "s-padded") {
        emit_pair(s_padded_mt(a.s, a.k, a.trimmed), c, out);
    } else {
        if (a.fills.empty() || a.fills.size() > 2) throw UsageError("exact-family needs one or two --fills values");
        const auto z = parse_binary(a.z);
        std::vector<BinaryString> outs;
        for (const auto& f : a.fills) outs.push_back(exact_deck_family(z, parse_binary(f), a.s));
        if (outs.size() == 2) {
            ConstructionPair p{outs[0], outs[1], GapParams(a.s, static_cast<int>(z.size())),
                               ClaimedProperty::exact_deck_only, false};
            emit_pair(p, c, out);
        } else if (c.json) {
            emit(out, Json{{"schema", kSchema}, {"record", "exact_family"}, {"z", z.str()}, {"s", a.s},
                           {"string", outs[0].str()}});
        } else {
            out << outs[0].str() << '\n';
        }
    }
    return kOk;
}

// --------------------------------------------------------------- search

void emit_collision(const CollisionReport& r, const Common& c, std::ostream& out) {
    if (c.json) {
        emit(out, to_json(r));
        return;
    }
    out << "deck_kind=" << to_string(r.kind);
    if (r.kind == DeckKind::wildcard_u) {
        out << " family=" << r.family;
    } else {
        out << " s=" << r.s << " k=" << r.k;
    }
    out << '\n' << "scanned=" << r.scanned_from << ".." << r.scanned_to << '\n';
    out << "n=" << (r.n ? std::to_string(*r.n) : std::string("none")) << '\n';
    if (r.n) {
        out << "confusable_pairs=" << r.confusable_pairs << " classes=" << r.classes << '\n';
        for (const auto& [x, y] : r.witnesses) out << "witness " << x << ' ' << y << '\n';
    }
}

int cmd_search(const std::string& which, const SearchArgs& a, const Common& c, std::ostream& out,
               std::ostream& err) {
    SearchOptions opt;
    opt.workers = a.workers;
    opt.max_witnesses = a.max_witnesses;
    opt.checkpoint_path = a.checkpoint;
    if (!a.quiet) opt.log = [&err](const std::string& m) { err << m << '\n'; };
    if (a.workers < 1) throw UsageError("--workers must be >= 1");
    if (a.max_witnesses < 1) throw UsageError("--max-witnesses must be >= 1");

    CollisionReport r;
    if (which == "SU") {
        if (a.k1 < 1) throw UsageError("search SU needs --k1");
        const auto spec = a.k2 > 0 ? USetSpec::pair(a.k1, a.k2) : USetSpec::single(1, a.k1);
        r = search_SU(spec, a.n_max, opt, a.n_min);
    } else {
        const GapParams params(a.s, a.k);
        if (which == "G") {
            r = search_G(params, a.n_max, opt, a.n_min);
        } else if (which == "Gstar") {
            r = search_G_star(params, a.n_max, opt, a.n_min);
        } else {
            r = search_exact_D(params, a.n_max, opt, a.n_min);
        }
    }
    emit_collision(r, c, out);
    return r.n ? kOk : kFalse;
}

// ------------------------------------------------------------- wildcard

int cmd_wildcard(const std::string& which, const WildcardArgs& a, const Common& c, std::ostream& out) {
    if (which == "count") {
        const auto in = need_inputs(a.inputs, 2, "wildcard count");
        const auto w = parse_wildcard(in[0]);
        const auto p = parse_wildcard(in[1]);
        const auto n = count_wildcard(w, p);
        if (c.json) {
            emit(out, Json{{"schema", kSchema}, {"record", "wildcard_count"}, {"w", w.str()}, {"p", p.str()},
                           {"count", n}});
        } else {
            out << n << '\n';
        }
        return kOk;
    }
    auto spec = [&] {
        if (a.k1 > 0) return USetSpec::pair(a.k1, a.k2);
        if (a.r < 0 || a.k < 0) throw UsageError("give either --r and --k, or --k1 and --k2");
        return USetSpec::single(a.r, a.k);
    };
    if (which == "family") {
        const auto fam = enumerate_U(spec());
        if (c.json) {
            Json list = Json::array();
            for (const auto& w : fam) list.push_back(w.str());
            emit(out, Json{{"schema", kSchema}, {"record", "u_family"}, {"family", spec().str()},
                           {"size", fam.size()}, {"members", std::move(list)}});
        } else {
            for (const auto& w : fam) out << w.str() << '\n';
        }
        return kOk;
    }
    if (which == "uequiv") {
        const auto in = need_inputs(a.inputs, 2, "wildcard uequiv");
        const auto sp = spec();
        const bool eq = u_equiv(parse_wildcard(in[0]), parse_wildcard(in[1]), sp);
        if (c.json) {
            emit(out, Json{{"schema", kSchema}, {"record", "u_equiv"}, {"family", sp.str()}, {"p", in[0]},
                           {"q", in[1]}, {"equivalent", eq}});
        } else {
            out << tf(eq) << '\n';
        }
        return eq ? kOk : kFalse;
    }
    if (which == "substitute") {
        const auto in = need_inputs(a.inputs, 3, "wildcard substitute");
        const auto h = substitute(parse_wildcard(in[0]), parse_binary(in[1]), parse_binary(in[2]));
        if (c.json) {
            emit(out, Json{{"schema", kSchema}, {"record", "substitute"}, {"p", in[0]}, {"x", in[1]}, {"y", in[2]},
                           {"h", h.str()}});
        } else {
            out << h.str() << '\n';
        }
        return kOk;
    }
    // lemma3
    const auto r = lemma3_check(
        {parse_binary(a.x), parse_binary(a.y), parse_wildcard(a.p), parse_wildcard(a.q), a.k, a.sigma});
    if (c.json) {
        emit(out, to_json(r));
    } else {
        out << "hypothesis.xy_eq7=" << tf(r.xy_eq7.all()) << '\n'
            << "hypothesis.pq_equivalent=" << tf(r.pq_equivalent) << '\n'
            << "degenerate=" << tf(r.degenerate) << '\n'
            << "conclusion.distinct=" << tf(r.distinct) << '\n'
            << "conclusion.deck_equal=" << tf(r.h_eq7.plain_equal) << '\n'
            << "conclusion.left_equal=" << tf(r.h_eq7.l_equal) << '\n'
            << "conclusion.right_equal=" << tf(r.h_eq7.r_equal) << '\n'
            << "conclusion.both_equal=" << tf(r.h_eq7.lr_equal) << '\n'
            << "mode=" << r.h_eq7.mode.name() << '\n'
            << "ends_agree=" << tf(r.ends_agree) << '\n';
    }
    return r.hypotheses_hold() && r.conclusions_hold() ? kOk : kFalse;
}

// --------------------------------------------------------------- bounds

BoundReport single_bound(const BoundsArgs& a) {
    auto need_k = [&] {
        if (a.k < 1) throw UsageError("--k is required");
    };
    BoundReport r;
    r.k = a.k;
    r.rounding = "exact";
    const auto& f = a.formula;
    if (f == "best") {
        need_k();
        return best_bound(a.k);
    }
    if (f == "padded" || f == "padded-star") {
        need_k();
        r.formula = FormulaId::padded;
        r.value = f == "padded" ? padded_bound(a.k) : padded_star_bound(a.k);
        r.note = f == "padded" ? "trimmed construction, 4(2^k-1)-2" : "untrimmed construction, 4(2^k-1)";
    } else if (f == "s-padded") {
        need_k();
        r.formula = FormulaId::s_padded;
        r.s = a.s;
        r.value = s_padded_bound(a.s, a.k);
    } else if (f == "kappa" || f == "dudik") {
        r.k = 0;
        r.k1 = a.k1;
        r.k2 = a.k2;
        r.formula = f == "kappa" ? FormulaId::kappa : FormulaId::dudik_su;
        r.value = f == "kappa" ? kappa(a.k1, a.k2) : dudik_su_bound(a.k1, a.k2);
        if (f == "dudik") r.rounding = "floor";
    } else if (f == "corollary") {
        need_k();
        r.formula = FormulaId::corollary_rec;
        r.value = corollary_rec_bound(a.k);
        r.note = "bound on G*(k); canonical split k = 3*floor(k/3) + sigma";
    } else if (f == "closed") {
        need_k();
        r.formula = FormulaId::closed_form;
        r.value = closed_form_bound(a.k);
        r.real_value = closed_form_value(a.k);
        r.rounding = "ceil";
        return r;
    } else if (f == "ungapped") {
        need_k();
        r.formula = FormulaId::ungapped_reference;
        r.real_value = ungapped_reference(a.k);
        r.value = r.real_value < 1.8e19 ? static_cast<std::uint64_t>(std::ceil(r.real_value)) : 0;
        r.rounding = "ceil";
        r.note = "ungapped S(k) reference, for comparison";
        return r;
    } else {
        throw UsageError("unknown --formula '" + f + "'");
    }
    r.real_value = static_cast<double>(r.value);
    return r;
}

int cmd_bounds(const std::string& which, const BoundsArgs& a, const Common& c, std::ostream& out) {
    if (which == "single") {
        const auto r = single_bound(a);
        if (c.json) {
            emit(out, to_json(r));
        } else {
            out << to_string(r.formula) << ' ' << r.value;
            if (r.formula == FormulaId::ungapped_reference) {
                std::ostringstream real;
                real << std::setprecision(17) << r.real_value;
                out << " (" << real.str() << ")";
            }
            out << '\n';
        }
        return kOk;
    }
    if (which == "table1") {
        const auto rows = table_one();
        if (c.json) {
            Json list = Json::array();
            for (const auto& row : rows) {
                list.push_back(Json{{"k", row.k}, {"G", row.exact}, {"x", row.x}, {"y", row.y},
                                    {"padded_bound", row.padded_bound}, {"S", row.ungapped_exact}});
            }
            emit(out, Json{{"schema", kSchema}, {"record", "table1"}, {"rows", std::move(list)}});
        } else {
            out << std::left << std::setw(3) << "k" << std::setw(5) << "G(k)" << std::setw(6) << "S(k)"
                << std::setw(8) << "bound" << "confusable pair\n";
            for (const auto& row : rows) {
                out << std::setw(3) << row.k << std::setw(5) << row.exact << std::setw(6) << row.ungapped_exact
                    << std::setw(8) << row.padded_bound << row.x << ' ' << row.y << '\n';
            }
        }
        return kOk;
    }
    std::vector<BoundReport> rows;
    if (which == "table2") {
        rows = table_two();
    } else {
        if (a.from < 2 || a.to < a.from) throw UsageError("summary needs 2 <= --from <= --to");
        for (int k = a.from; k <= a.to; ++k) rows.push_back(best_bound(k));
    }
    if (c.json) {
        Json list = Json::array();
        for (const auto& r : rows) list.push_back(to_json(r));
        emit(out, Json{{"schema", kSchema}, {"record", which}, {"rows", std::move(list)}});
    } else {
        out << std::left << std::setw(4) << "k" << std::setw(14) << "bound" << "formula\n";
        for (const auto& r : rows) {
            out << std::setw(4) << r.k << std::setw(14) << r.value << to_string(r.formula) << '\n';
        }
    }
    return kOk;
}

// --------------------------------------------------------------- oracle

int cmd_oracle(const std::string& which, const OracleArgs& a, const Common& c, std::ostream& out) {
    const GapParams params(a.s, a.k);
    if (which == "deck") {
        const auto in = need_inputs(a.inputs, 1, "oracle deck");
        const auto x = parse_binary(in[0]);
        const auto sig = naive::signature(x, params);
        if (c.json) {
            auto j = to_json(sig);
            j["oracle"] = true;
            emit(out, j);
            return kOk;
        }
        out << "# signature s=" << a.s << " k=" << a.k << " n=" << x.size() << " mode=EXACT\n";
        for (std::size_t i = 0; i < sig.patterns(); ++i) {
            if (sig.count(i) != 0) out << pattern_string(i).str() << '\t' << sig.count(i) << '\n';
        }
        return kOk;
    }
    naive::Relation rel;
    if (a.kind == "full") {
        rel = naive::Relation::full;
    } else if (a.kind == "exact") {
        rel = naive::Relation::exact_slice;
    } else if (a.kind == "eq7") {
        rel = naive::Relation::eq7;
    } else {
        throw UsageError("unknown --kind '" + a.kind + "' (expected full, exact or eq7)");
    }
    if (a.n < 1 || a.n > 14) throw UsageError("oracle collision supports 1 <= --n <= 14");
    const auto hit = naive::find_collision(a.n, params, rel);
    if (c.json) {
        Json j{{"schema", kSchema}, {"record", "oracle_collision"}, {"kind", a.kind},
               {"params", Json{{"s", a.s}, {"k", a.k}}}, {"n", a.n}};
        j["witness"] = hit ? Json::array({hit->first.str(), hit->second.str()}) : Json(nullptr);
        emit(out, j);
    } else if (hit) {
        out << "witness " << hit->first.str() << ' ' << hit->second.str() << '\n';
    } else {
        out << "none\n";
    }
    return hit ? kOk : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gdeck: gapped k-deck computation, constructions, exhaustive search and bounds", "gdeck"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json, "Emit a structured (JSON) record instead of text");

    auto add_sk = [](CLI::App* sub, int& s, int& k) {
        sub->add_option("-s,--s", s, "Minimum index gap s (1 = classical deck)")->capture_default_str();
        sub->add_option("-k,--k", k, "Deck depth k")->capture_default_str();
    };
    auto add_mode = [](CLI::App* sub, DeckArgs& a) {
        sub->add_option("--mode", a.mode, "Counting mode: exact or fingerprint")->capture_default_str();
        sub->add_option("--primes", a.primes, "Fingerprint moduli (default: three primes below 2^62)")
            ->delimiter(',');
    };

    DeckArgs deck_args;
    auto* deck = app.add_subcommand("deck", "Gapped deck B^(k) of a string as a pattern-count signature");
    deck->add_option("input", deck_args.inputs, "Binary string, or @file")->required();
    add_sk(deck, deck_args.s, deck_args.k);
    add_mode(deck, deck_args);
    deck->add_option("--puncture", deck_args.puncture, "Puncture before counting: NONE, L, R or LR")
        ->capture_default_str();

    DeckArgs equal_args;
    auto* equal = app.add_subcommand("equal", "Gapped deck equality B^(k)(x) = B^(k)(y)");
    equal->add_option("inputs", equal_args.inputs, "Two binary strings, or @file")->required();
    add_sk(equal, equal_args.s, equal_args.k);
    add_mode(equal, equal_args);
    equal->add_flag("--exact-only", equal_args.exact_only, "Compare only the exact deck D^(k) (length-k slice)");

    DeckArgs eq7_args;
    auto* eq7 = app.add_subcommand("eq7", "Four-way condition: plain, LR, L and R punctured decks all equal");
    eq7->add_option("inputs", eq7_args.inputs, "Two binary strings, or @file")->required();
    add_sk(eq7, eq7_args.s, eq7_args.k);
    add_mode(eq7, eq7_args);
    eq7->add_option("--depth", eq7_args.depth, "Bits removed per punctured end")->capture_default_str();

    ConstructArgs con_args;
    auto* construct = app.add_subcommand("construct", "Explicit confusable-pair constructions");
    construct->require_subcommand(1);
    std::string con_which;
    auto* c_classical = construct->add_subcommand("classical", "Morse-Thue pair (xy, yx), equal classical k-decks");
    c_classical->add_option("-k,--k", con_args.k, "Depth k")->required();
    auto* c_padded = construct->add_subcommand("padded", "Padded Morse-Thue pair, length 4(2^k-1)");
    c_padded->add_option("-k,--k", con_args.k, "Depth k")->required();
    c_padded->add_flag("--trimmed", con_args.trimmed, "Drop the outer padding bits, length 4(2^k-1)-2");
    auto* c_spadded = construct->add_subcommand("s-padded", "s-gapped padded Morse-Thue pair");
    c_spadded->add_option("-s,--s", con_args.s, "Gap s >= 2")->required();
    c_spadded->add_option("-k,--k", con_args.k, "Depth k")->required();
    c_spadded->add_flag("--trimmed", con_args.trimmed, "Drop s-1 zeros from each end");
    auto* c_family = construct->add_subcommand("exact-family", "Strings z_1 f z_2 f ... z_k sharing exact deck {z}");
    c_family->add_option("--z", con_args.z, "Skeleton z")->required();
    c_family->add_option("--fills", con_args.fills, "Fill bits, (s-1)(|z|-1) of them; repeat for a pair")
        ->required()
        ->take_all()
        ->expected(1, 2);
    c_family->add_option("-s,--s", con_args.s, "Gap s")->capture_default_str();

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Exhaustive minimal-length collision search");
    search->require_subcommand(1);
    auto add_search_opts = [&](CLI::App* sub, bool deck_kind) {
        if (deck_kind) add_sk(sub, search_args.s, search_args.k);
        sub->add_option("--n-min", search_args.n_min, "First length (0 = first nondegenerate length)")
            ->capture_default_str();
        sub->add_option("--n-max", search_args.n_max, "Last length")->capture_default_str();
        sub->add_option("--workers", search_args.workers, "Worker threads")->capture_default_str();
        sub->add_option("--max-witnesses", search_args.max_witnesses, "Witness pairs reported")->capture_default_str();
        sub->add_option("--checkpoint", search_args.checkpoint, "Append-only progress log; resumes certified lengths");
        sub->add_flag("--quiet", search_args.quiet, "Suppress progress messages on stderr");
    };
    auto* s_g = search->add_subcommand("G", "G_s(k): smallest n with a full gapped-deck collision");
    add_search_opts(s_g, true);
    auto* s_gstar = search->add_subcommand("Gstar", "G*(k): smallest n where plain, L, R and LR decks all collide");
    add_search_opts(s_gstar, true);
    auto* s_exact = search->add_subcommand("exactD", "Smallest n with an exact-deck D^(k) collision");
    add_search_opts(s_exact, true);
    auto* s_su = search->add_subcommand("SU", "S_U(k1[,k2]): smallest m with a U-equivalent pair over {X,Y}");
    add_search_opts(s_su, false);
    s_su->add_option("--k1", search_args.k1, "U_1 depth k1")->required();
    s_su->add_option("--k2", search_args.k2, "U_2 depth k2 (omit for U_1(k1) alone)");

    WildcardArgs wc_args;
    auto* wildcard = app.add_subcommand("wildcard", "Wildcard patterns over {X,Y,J}");
    wildcard->require_subcommand(1);
    auto* w_count = wildcard->add_subcommand("count", "N(w, p): occurrences of wildcard pattern w in p");
    w_count->add_option("inputs", wc_args.inputs, "Pattern w and text p")->required();
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--r", wc_args.r, "Non-J symbol count r for U_r(k)");
        sub->add_option("--k", wc_args.k, "Maximum length k for U_r(k)");
        sub->add_option("--k1", wc_args.k1, "k1 for U(k1,k2)");
        sub->add_option("--k2", wc_args.k2, "k2 for U(k1,k2)");
    };
    auto* w_family = wildcard->add_subcommand("family", "List the members of U_r(k) or U(k1,k2)");
    add_family(w_family);
    auto* w_uequiv = wildcard->add_subcommand("uequiv", "p ~U q: equal wildcard counts over a U family");
    w_uequiv->add_option("inputs", wc_args.inputs, "Strings p and q over {X,Y}")->required();
    add_family(w_uequiv);
    auto* w_subst = wildcard->add_subcommand("substitute", "h_{x,y}(p): X -> 0x0, Y -> 0y0");
    w_subst->add_option("inputs", wc_args.inputs, "Pattern p, then binary x and y")->required();
    auto* w_lemma3 = wildcard->add_subcommand("lemma3", "Check the substitution lemma on one instance");
    w_lemma3->add_option("--x", wc_args.x, "Binary x")->required();
    w_lemma3->add_option("--y", wc_args.y, "Binary y")->required();
    w_lemma3->add_option("--p", wc_args.p, "Pattern p over {X,Y}")->required();
    w_lemma3->add_option("--q", wc_args.q, "Pattern q over {X,Y}")->required();
    w_lemma3->add_option("--k", wc_args.k, "Depth k")->required();
    w_lemma3->add_option("--sigma", wc_args.sigma, "sigma in {0,1,2}")->required();

    BoundsArgs b_args;
    auto* bounds = app.add_subcommand("bounds", "Upper bounds on G(k) and related quantities");
    bounds->require_subcommand(1);
    auto* b_single = bounds->add_subcommand("single", "Evaluate one bound formula");
    b_single->add_option("--formula", b_args.formula,
                         "best, padded, padded-star, s-padded, kappa, dudik, corollary, closed, ungapped")
        ->capture_default_str();
    b_single->add_option("-k,--k", b_args.k, "k");
    b_single->add_option("-s,--s", b_args.s, "s (s-padded)")->capture_default_str();
    b_single->add_option("--k1", b_args.k1, "k1 (kappa, dudik)");
    b_single->add_option("--k2", b_args.k2, "k2 (kappa, dudik)");
    bounds->add_subcommand("table1", "Exact G(k) for k = 2, 3, 4 with confusable pairs");
    bounds->add_subcommand("table2", "Closed-form bound on G(k) for k = 28..33");
    auto* b_summary = bounds->add_subcommand("summary", "Best known bound for a range of k");
    b_summary->add_option("--from", b_args.from, "First k")->capture_default_str();
    b_summary->add_option("--to", b_args.to, "Last k")->capture_default_str();

    OracleArgs o_args;
    auto* oracle = app.add_subcommand("oracle", "Brute-force index-tuple enumeration for cross-checks");
    oracle->require_subcommand(1);
    auto* o_deck = oracle->add_subcommand("deck", "Deck by direct enumeration of index tuples");
    o_deck->add_option("input", o_args.inputs, "Binary string, or @file")->required();
    add_sk(o_deck, o_args.s, o_args.k);
    auto* o_coll = oracle->add_subcommand("collision", "Smallest colliding pair by pairwise comparison");
    add_sk(o_coll, o_args.s, o_args.k);
    o_coll->add_option("--n", o_args.n, "Length n (<= 14)")->required();
    o_coll->add_option("--kind", o_args.kind, "full, exact or eq7")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        // Subcommand --help surfaces through CallForHelp on the sub-app.
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    auto picked = [](CLI::App* parent) -> std::string {
        for (auto* sub : parent->get_subcommands()) return sub->get_name();
        return {};
    };

    try {
        if (deck->parsed()) return cmd_deck(deck_args, common, out);
        if (equal->parsed()) return cmd_equal(equal_args, common, out);
        if (eq7->parsed()) return cmd_eq7(eq7_args, common, out);
        if (construct->parsed()) return cmd_construct(picked(construct), con_args, common, out);
        if (search->parsed()) return cmd_search(picked(search), search_args, common, out, err);
        if (wildcard->parsed()) return cmd_wildcard(picked(wildcard), wc_args, common, out);
        if (bounds->parsed()) return cmd_bounds(picked(bounds), b_args, common, out);
        if (oracle->parsed()) return cmd_oracle(picked(oracle), o_args, common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    err << "error: no command given\n";
    return kUsage;
}

}  // namespace gdeck::cli
