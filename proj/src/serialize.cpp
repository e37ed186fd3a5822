#include "spectra/serialize.hpp"

#include <cctype>
#include <sstream>

namespace spectra {

Json to_json(const Rat& r) {
    return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rat rat_from_json(const Json& j) {
    return rat_from_string(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

Json to_json(const Surd& s) {
    return Json{{"a", s.a().get_str()},
                {"b", s.b().get_str()},
                {"c", s.c().get_str()},
                {"d", s.d().get_str()}};
}

Surd surd_from_json(const Json& j) {
    return Surd(Int(j.at("a").get<std::string>()), Int(j.at("b").get<std::string>()),
                Int(j.at("c").get<std::string>()), Int(j.at("d").get<std::string>()));
}

Json to_json(const CReal& x) {
    return Json{{"lo", to_json(x.lo())}, {"hi", to_json(x.hi())}, {"approx", x.approx()}};
}

Json to_json(const Word& w) { return Json(w.str()); }

Word word_from_json(const Json& j) { return Word(j.get<std::string>()); }

Json to_json(const AlphabetPair& p) {
    return Json{{"derivation", p.derivation},
                {"alpha", p.alpha.str()},
                {"beta", p.beta.str()}};
}

AlphabetPair pair_from_json(const Json& j) {
    AlphabetPair out = AlphabetPair::root();
    for (char c : j.at("derivation").get<std::string>())
        out = (c == 'U') ? out.child_U() : out.child_V();
    if (out.alpha.str() != j.at("alpha").get<std::string>() ||
        out.beta.str() != j.at("beta").get<std::string>())
        throw ParseError("pair does not match its derivation", 0);
    return out;
}

namespace {

std::string kernel_letters(const LetterSeq& k) {
    std::string s;
    for (uint8_t l : k) s.push_back(l == kAlpha ? 'A' : 'B');
    return s;
}

}  // namespace

Json to_json(const RenormDecomposition& d) {
    return Json{{"pair", to_json(d.pair)},
                {"w1", d.w1.str()},
                {"kernel_letters", kernel_letters(d.kernel)},
                {"w2", d.w2.str()}};
}

Json to_json(const RenormTrace& t) {
    Json steps = Json::array();
    for (const RenormStep& s : t.steps) {
        Json j = to_json(s.decomposition);
        j["case_label"] = s.case_label;
        steps.push_back(std::move(j));
    }
    return Json{{"schema_version", kSchemaVersion}, {"steps", steps}};
}

Json to_json(const SigmaSet& s) {
    Json certified = Json::array(), unknown = Json::array();
    for (const Word& w : s.certified) certified.push_back(w.str());
    for (const Word& w : s.unknown) unknown.push_back(w.str());
    return Json{{"schema_version", kSchemaVersion}, {"t", s.t.str()},      {"n", s.n},
                {"depth", s.depth},                 {"certified", certified}, {"unknown", unknown}};
}

SigmaSet sigma_set_from_json(const Json& j) {
    SigmaSet out{parse_bound(j.at("t").get<std::string>()), j.at("n").get<long>(),
                 j.at("depth").get<long>(), {}, {}};
    for (const auto& w : j.at("certified")) out.certified.push_back(Word(w.get<std::string>()));
    for (const auto& w : j.at("unknown")) out.unknown.push_back(Word(w.get<std::string>()));
    return out;
}

Json to_json(const TheoremReport& r) {
    return Json{{"schema_version", kSchemaVersion},
                {"n", r.n},
                {"B", r.B},
                {"lower", to_json(r.lower)},
                {"middle", to_json(r.middle)},
                {"upper", to_json(r.upper)},
                {"lower_equals_middle", r.lower_equals_middle},
                {"middle_equals_upper", r.middle_equals_upper},
                {"middle_included_in_upper", r.middle_included_in_upper},
                {"middle_matches_tree_oracle", r.middle_matches_tree_oracle},
                {"unknown_total", r.unknown_total},
                {"lower_witnesses_checked", r.lower_witnesses_checked}};
}

Json to_json(const QrSet& q) {
    Json words = Json::array(), unknown = Json::array();
    for (const Word& w : q.words) words.push_back(w.str());
    for (const Word& w : q.unknown) unknown.push_back(w.str());
    return Json{{"schema_version", kSchemaVersion}, {"r", q.r}, {"words", words},
                {"unknown", unknown}};
}

Json to_json(const CoveringReport& c) {
    return Json{{"schema_version", kSchemaVersion},
                {"t", c.t.str()},
                {"r", c.r},
                {"count", c.count},
                {"unknown_count", c.unknown_count},
                {"estimate", to_json(c.estimate)}};
}

Json to_json(const GapReport& g) {
    Json points = Json::array();
    for (const GapPoint& p : g.points) {
        points.push_back(Json{{"type", p.type == GapCase::TypeA ? "A" : "B"},
                              {"j", p.j},
                              {"value", to_json(p.value)},
                              {"value_approx", p.value.approx()},
                              {"position", p.position},
                              {"margin_approx", p.margin.approx()}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"k", g.spec.k},
                {"x", to_json(g.spec.x_exact)},
                {"y", to_json(g.spec.y_exact)},
                {"x_approx", g.spec.x_exact.approx()},
                {"y_approx", g.spec.y_exact.approx()},
                {"j_max", g.j_max},
                {"s_min", g.s_min},
                {"all_outside", g.all_outside},
                {"points", points}};
}

Json to_json(const DimensionBracket& b) {
    return Json{{"schema_version", kSchemaVersion},
                {"beta_lower", to_json(b.beta_lower)},
                {"alpha_upper", to_json(b.alpha_upper)}};
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty number", 0);
    size_t slash = text.find('/');
    if (slash != std::string::npos) {
        Rat r = rat_from_string(text.substr(0, slash), text.substr(slash + 1));
        return r;
    }
    size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
    std::string digits;
    long scale = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        digits.push_back(text[i++]);
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits.push_back(text[i++]);
            ++scale;
        }
    }
    if (digits.empty()) throw ParseError("expected digits", i);
    long expo = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
        std::string ed;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ed.push_back(text[i++]);
        if (ed.empty()) throw ParseError("expected exponent digits", i);
        expo = std::stol(ed) * (eneg ? -1 : 1);
    }
    if (i != text.size()) throw ParseError("trailing characters in number", i);
    Rat r{Int(digits)};
    long shift = expo - scale;
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        r *= Rat(p10);
    else
        r /= Rat(p10);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

Bound parse_bound(const std::string& expr) {
    // rational | "3+e^-R" | "3+B^-N" | "3-B^-N"
    size_t plus = expr.find('+'), minus = expr.find('-');
    size_t split = std::string::npos;
    char op = 0;
    if (plus != std::string::npos && plus > 0) {
        split = plus;
        op = '+';
    } else if (minus != std::string::npos && minus > 0 && expr.find("^-") != minus - 1) {
        split = minus;
        op = '-';
    }
    if (split == std::string::npos) return Bound::exact(parse_rational(expr));

    Rat base = parse_rational(expr.substr(0, split));
    std::string rest = expr.substr(split + 1);
    size_t caret = rest.find("^-");
    if (caret == std::string::npos)
        throw ParseError("expected B^-N or e^-R after the sign", split + 1);
    std::string head = rest.substr(0, caret);
    std::string tail = rest.substr(caret + 2);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw ParseError("expected a positive integer exponent", split + 1 + caret + 2);
    long expo = std::stol(tail);
    if (head == "e") {
        if (base != 3) throw ParseError("e^-R bounds must have base value 3", 0);
        if (expo < 1) throw ParseError("e^-R requires R >= 1", split + 1 + caret + 2);
        return op == '+' ? Bound::three_plus_exp(expo) : Bound::three_minus_exp(expo);
    }
    if (head.empty() || !std::all_of(head.begin(), head.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw ParseError("expected an integer base before ^-", split + 1);
    Int b(head);
    if (b <= 1) throw ParseError("power base must exceed 1", split + 1);
    Int bn;
    mpz_pow_ui(bn.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(expo));
    Rat delta(Int(1), bn);
    delta.canonicalize();
    return Bound::exact(op == '+' ? base + delta : base - delta);
}

std::string covering_csv(const std::vector<CoveringReport>& rows) {
    std::ostringstream os;
    os << "t,r,count,unknown_count,estimate\n";
    for (const CoveringReport& c : rows)
        os << c.t.str() << "," << c.r << "," << c.count << "," << c.unknown_count << ","
           << c.estimate.approx() << "\n";
    return os.str();
}

}  // namespace spectra
