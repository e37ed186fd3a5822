#include "spectra/renorm.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace spectra {

namespace {

std::string expand_kernel(const AlphabetPair& p, const LetterSeq& kernel) {
    std::string alpha = p.alpha.to_word().str(), beta = p.beta.to_word().str();
    std::string out;
    for (uint8_t l : kernel) out += (l == kAlpha) ? alpha : beta;
    return out;
}

bool is_suffix(const std::string& part, const std::string& whole) {
    return part.size() <= whole.size() &&
           whole.compare(whole.size() - part.size(), part.size(), part) == 0;
}

bool is_prefix(const std::string& part, const std::string& whole) {
    return part.size() <= whole.size() && whole.compare(0, part.size(), part) == 0;
}

}  // namespace

Word RenormDecomposition::kernel_digits() const { return Word(expand_kernel(pair, kernel)); }

Word RenormDecomposition::digits() const {
    return Word(w1.str() + expand_kernel(pair, kernel) + w2.str());
}

size_t RenormDecomposition::kernel_size_digits() const {
    size_t a = pair.alpha.digit_size(), b = pair.beta.digit_size(), n = 0;
    for (uint8_t l : kernel) n += (l == kAlpha) ? a : b;
    return n;
}

bool RenormDecomposition::kernel_starts_with(uint8_t letter) const {
    return !kernel.empty() && kernel.front() == letter;
}

bool RenormDecomposition::kernel_ends_with(uint8_t letter) const {
    return !kernel.empty() && kernel.back() == letter;
}

bool decomposition_valid(const RenormDecomposition& d, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    size_t la = d.pair.alpha.digit_size(), lb = d.pair.beta.digit_size();
    size_t maxlen = std::max(la, lb);
    std::string ab = d.pair.tree_word().to_word().str();
    if (d.w1.size() >= maxlen || d.w2.size() >= maxlen) return fail("trailing word too long");
    if (!is_suffix(d.w1.str(), ab)) return fail("w1 is not a suffix of alpha beta");
    if (!is_prefix(d.w2.str(), ab)) return fail("w2 is not a prefix of alpha beta");
    if (!d.pair.is_root()) {
        AlphabetPair par = d.pair.parent();
        if (d.pair.last_move() == 'V' && d.kernel_ends_with(kAlpha)) {
            // pair = (u, uv): a kernel ending with alpha requires |v| <= |w2|
            if (par.beta.digit_size() > d.w2.size()) return fail("kernel ends with alpha but w2 shorter than v");
        }
        if (d.pair.last_move() == 'U' && d.kernel_starts_with(kBeta)) {
            // pair = (uv, v): a kernel starting with beta requires |u| <= |w1|
            if (par.alpha.digit_size() > d.w1.size()) return fail("kernel starts with beta but w1 shorter than u");
        }
    }
    return true;
}

std::optional<RenormDecomposition> check_weak_renorm(const Word& w, const AlphabetPair& p) {
    std::string ab = p.tree_word().to_word().str();
    std::string alpha = p.alpha.to_word().str(), beta = p.beta.to_word().str();
    size_t maxlen = std::max(alpha.size(), beta.size());
    const std::string& s = w.str();
    for (size_t total = 0; total < 2 * maxlen - 1; ++total) {
        for (size_t l1 = 0; l1 <= total && l1 < maxlen; ++l1) {
            size_t l2 = total - l1;
            if (l2 >= maxlen || l1 + l2 > s.size()) continue;
            if (!is_suffix(s.substr(0, l1), ab)) continue;
            if (!is_prefix(s.substr(s.size() - l2), ab)) continue;
            auto letters = factorize_tokens(s.substr(l1, s.size() - l1 - l2), alpha, beta);
            if (!letters) continue;
            RenormDecomposition d{p, Word(s.substr(0, l1)), std::move(*letters),
                                  Word(s.substr(s.size() - l2))};
            if (decomposition_valid(d)) return d;
        }
    }
    return std::nullopt;
}

std::optional<SemiRenorm> semi_renorm(const Word& w, const AlphabetPair& p) {
    // minimal extension first; on ties the right side goes first
    const std::string& s = w.str();
    std::vector<std::pair<std::string, std::string>> exts = {
        {"", ""},  {"", "1"}, {"", "2"},  {"1", ""},  {"2", ""},  {"1", "1"},
        {"1", "2"}, {"2", "1"}, {"2", "2"},
    };
    for (const auto& [left, right] : exts) {
        Word cand(left + s + right);
        if (auto d = check_weak_renorm(cand, p)) return SemiRenorm{cand, std::move(*d)};
    }
    return std::nullopt;
}

namespace {

struct KernelParse {
    // no-vv branch: [v?] u^{e_1} v ... u^{e_k} v [u^s]
    // has-vv branch: v^{lead} (u v^{e_1}) ... (u v^{e_k}) [u]
    bool has_uu = false, has_vv = false;
    long lead = 0;   // leading count of the single-letter separator side
    long trail = 0;  // trailing power count
    std::vector<long> exps;
};

KernelParse parse_no_vv(const LetterSeq& k) {
    KernelParse p;
    size_t i = 0;
    if (k[0] == kBeta) {
        p.lead = 1;
        i = 1;
    }
    while (i < k.size()) {
        size_t j = i;
        while (j < k.size() && k[j] == kAlpha) ++j;
        long run = static_cast<long>(j - i);
        if (j < k.size()) {  // followed by a single v
            p.exps.push_back(run);
            i = j + 1;
        } else {
            p.trail = run;
            i = j;
        }
    }
    return p;
}

KernelParse parse_has_vv(const LetterSeq& k) {
    KernelParse p;
    size_t i = 0;
    while (i < k.size() && k[i] == kBeta) ++i;
    p.lead = static_cast<long>(i);
    while (i < k.size()) {
        ++i;  // the single u
        size_t j = i;
        while (j < k.size() && k[j] == kBeta) ++j;
        long run = static_cast<long>(j - i);
        if (run == 0 && j == k.size()) {
            p.trail = 1;  // kernel ends with u
        } else {
            p.exps.push_back(run);
        }
        i = j;
    }
    return p;
}

LetterSeq alpha_pow_beta_blocks(const std::vector<long>& exps) {
    LetterSeq out;
    for (long e : exps) {
        out.insert(out.end(), static_cast<size_t>(e - 1), kAlpha);
        out.push_back(kBeta);
    }
    return out;
}

LetterSeq alpha_beta_pow_blocks(const std::vector<long>& exps) {
    LetterSeq out;
    for (long e : exps) {
        out.push_back(kAlpha);
        out.insert(out.end(), static_cast<size_t>(e - 1), kBeta);
    }
    return out;
}

}  // namespace

RenormStep renorm_step(const RenormDecomposition& d, long budget_r) {
    if (d.kernel.empty()) throw DomainError("renorm_step requires a nonempty kernel");
    {
        std::string why;
        if (!decomposition_valid(d, &why))
            throw std::invalid_argument("renorm_step: invalid decomposition: " + why);
    }
    if (budget_r >= 5) {
        // heuristic guard on the caller's membership obligation
        if (!forbidden_patterns(d.digits(), budget_r).empty())
            throw ForbiddenConfiguration("digit-level forbidden pattern in word");
    }

    bool has_uu = false, has_vv = false;
    for (size_t i = 0; i + 1 < d.kernel.size(); ++i) {
        if (d.kernel[i] == kAlpha && d.kernel[i + 1] == kAlpha) has_uu = true;
        if (d.kernel[i] == kBeta && d.kernel[i + 1] == kBeta) has_vv = true;
    }
    if (has_uu && has_vv)
        throw ForbiddenConfiguration("kernel contains both uu and vv");

    const AlphabetPair& uv_pair = d.pair;
    size_t lu = uv_pair.alpha.digit_size(), lv = uv_pair.beta.digit_size();
    std::string u_digits = uv_pair.alpha.to_word().str();
    std::string v_digits = uv_pair.beta.to_word().str();

    RenormDecomposition out;
    std::ostringstream label;

    if (!has_vv) {
        KernelParse k = parse_no_vv(d.kernel);
        bool sv = k.lead == 1, eu = k.trail >= 1;
        bool any_big = std::any_of(k.exps.begin(), k.exps.end(), [](long e) { return e >= 2; });
        if (!sv && !eu) {
            label << "no-vv/case1";
            out = {uv_pair.child_V(), d.w1, alpha_pow_beta_blocks(k.exps), d.w2};
        } else if (sv && !eu) {
            if (d.w1.size() < lu) {
                label << "no-vv/case2a";
                out = {uv_pair.child_V(), Word(d.w1.str() + v_digits),
                       alpha_pow_beta_blocks(k.exps), d.w2};
            } else if (any_big) {
                throw ForbiddenConfiguration(
                    "kernel v u^e... with e >= 2 and |w1| >= |u| (transposed aa..bb)");
            } else {
                label << "no-vv/case2b";
                LetterSeq ker{kBeta};
                ker.insert(ker.end(), k.exps.size(), kAlpha);
                out = {uv_pair.child_U(), d.w1, std::move(ker), d.w2};
            }
        } else {
            long r = (lv <= d.w2.size()) ? 0 : 1;
            if (r == 1 && lv > lu + d.w2.size())
                throw std::invalid_argument("renorm_step: |v| > |u w2| on an ending-with-u kernel");
            auto finish_u_power = [&](Word w1_new, const char* tag) {
                label << tag << "(r=" << r << ")";
                LetterSeq ker = alpha_pow_beta_blocks(k.exps);
                ker.insert(ker.end(), static_cast<size_t>(k.trail - r), kAlpha);
                std::string w2_new = (r == 1 ? u_digits : std::string()) + d.w2.str();
                out = {uv_pair.child_V(), std::move(w1_new), std::move(ker), Word(w2_new)};
            };
            if (!sv) {
                finish_u_power(d.w1, "no-vv/case3");
            } else if (d.w1.size() >= lu) {
                if (any_big || k.trail >= 2)
                    throw ForbiddenConfiguration(
                        "kernel v...u^e with e >= 2 and |w1| >= |u| (transposed aa..bb)");
                label << "no-vv/case4a";
                LetterSeq ker{kBeta};
                ker.insert(ker.end(), k.exps.size() + 1, kAlpha);
                // v (uv)^k u: the trailing u moves into w2
                ker.pop_back();
                out = {uv_pair.child_U(), d.w1, std::move(ker), Word(u_digits + d.w2.str())};
            } else {
                finish_u_power(Word(d.w1.str() + v_digits), "no-vv/case4b");
            }
        }
    } else {
        KernelParse k = parse_has_vv(d.kernel);
        bool su = k.lead == 0, eu = k.trail >= 1;
        if (eu && d.w2.size() >= lv)
            throw ForbiddenConfiguration(
                "kernel ...u with vv present and |w2| >= |v| (aa..bb after transpose)");
        if (su) {
            label << (eu ? "has-vv/case2" : "has-vv/case1");
            std::string w2_new = (eu ? u_digits : std::string()) + d.w2.str();
            out = {uv_pair.child_U(), d.w1, alpha_beta_pow_blocks(k.exps), Word(w2_new)};
        } else {
            long r = (lu <= d.w1.size()) ? 0 : 1;
            if (r == 1 && lu > d.w1.size() + lv)
                throw std::invalid_argument("renorm_step: |u| > |w1 v| on a starting-with-v kernel");
            label << (eu ? "has-vv/case4" : "has-vv/case3") << "(r=" << r << ")";
            LetterSeq ker(static_cast<size_t>(k.lead - r), kBeta);
            LetterSeq rest = alpha_beta_pow_blocks(k.exps);
            ker.insert(ker.end(), rest.begin(), rest.end());
            std::string w1_new = d.w1.str() + (r == 1 ? v_digits : std::string());
            std::string w2_new = (eu ? u_digits : std::string()) + d.w2.str();
            out = {uv_pair.child_U(), Word(w1_new), std::move(ker), Word(w2_new)};
        }
    }

    std::string why;
    if (!decomposition_valid(out, &why) || out.digits() != d.digits())
        throw std::logic_error("renorm_step produced an invalid decomposition: " + why);
    return {std::move(out), label.str()};
}

RenormUntilResult renorm_until(const Word& w, size_t target_digits, long budget_r) {
    auto sr = semi_renorm(w, AlphabetPair::root());
    if (!sr) throw NonRenormalizable("word does not embed in an even-run word");
    RenormUntilResult res;
    res.decomposition = sr->decomposition;
    while (res.decomposition.pair.digit_size() < target_digits) {
        if (res.decomposition.kernel.empty())
            throw NonRenormalizable("kernel exhausted before the alphabet target");
        RenormStep step = renorm_step(res.decomposition, budget_r);
        res.decomposition = step.decomposition;
        res.trace.steps.push_back(std::move(step));
    }
    res.pair = res.decomposition.pair;
    return res;
}

KernelForm kernel_exponents(const RenormDecomposition& d) {
    if (d.kernel.empty()) throw DomainError("kernel_exponents requires a nonempty kernel");
    bool has_aa = false, has_bb = false;
    for (size_t i = 0; i + 1 < d.kernel.size(); ++i) {
        if (d.kernel[i] == kAlpha && d.kernel[i + 1] == kAlpha) has_aa = true;
        if (d.kernel[i] == kBeta && d.kernel[i + 1] == kBeta) has_bb = true;
    }
    if (has_aa && has_bb) throw MixedKernel("kernel contains both alpha alpha and beta beta");

    KernelForm form;
    form.shape = has_bb ? KernelForm::BetaPowers : KernelForm::AlphaPowers;
    uint8_t theta = form.shape == KernelForm::AlphaPowers ? kAlpha : kBeta;

    std::vector<long> full;  // e_0 .. e_l of theta-powers between separators
    long run = 0;
    for (uint8_t l : d.kernel) {
        if (l == theta) {
            ++run;
        } else {
            full.push_back(run);
            run = 0;
        }
    }
    full.push_back(run);
    form.ends_with_separator = d.kernel.back() != theta;
    form.exponents = full;
    if (form.ends_with_separator) form.exponents.pop_back();

    const ABWord& theta_word = theta == kAlpha ? d.pair.alpha : d.pair.beta;
    size_t la = d.pair.alpha.digit_size(), lb = d.pair.beta.digit_size();
    auto r_of_power = [&](long e) -> long {
        if (e <= 0) return 0;
        Word p = theta_word.to_word();
        std::string s;
        for (long i = 0; i < e; ++i) s += p.str();
        return size_r(Word(s).to_digits());
    };

    long l = static_cast<long>(full.size()) - 1;
    for (long i = 0; i < l; ++i) {
        long a = full[i], b = full[i + 1];
        if (std::abs(a - b) <= 1) continue;
        KernelViolation v;
        v.index = static_cast<size_t>(i);
        v.boundary = (i == 0 || i == l - 1);
        if (i == 0 && a - b >= 2) {
            // leading bullet e_1 >= e_0 - 1
            v.unconditional = (theta == kAlpha) || (la <= lb);
            v.size_r_power = r_of_power(a);
            form.violations.push_back(v);
        } else if (i == l - 1 && b - a >= 2) {
            // trailing bullet e_l <= e_{l-1} + 1
            v.unconditional = (theta == kBeta) || (lb <= la);
            v.size_r_power = r_of_power(a);
            form.violations.push_back(v);
        } else if (i > 0 && i < l - 1) {
            v.unconditional = true;
            v.size_r_power = r_of_power(a);
            form.violations.push_back(v);
        }
    }
    return form;
}

}  // namespace spectra
