#include "colortree/combinatorics.hpp"

#include <charconv>
#include <numeric>

#include "colortree/errors.hpp"

namespace colortree {

ColorProfile::ColorProfile(std::vector<unsigned> counts) : counts_(std::move(counts)) {
    if (counts_.size() < 2 || counts_.size() > kHardMaxColors) {
        throw DomainError("profile must have between 2 and " + std::to_string(kHardMaxColors) +
                          " colors, got " + std::to_string(counts_.size()));
    }
}

ColorProfile ColorProfile::zero(unsigned d) { return ColorProfile(std::vector<unsigned>(d, 0)); }

unsigned ColorProfile::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

std::string ColorProfile::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts_[i]);
    }
    return out + ")";
}

ColorProfile parse_profile(const std::string& text) {
    std::vector<unsigned> counts;
    const char* p = text.data();
    const char* end = p + text.size();
    if (p == end) throw DomainError("empty profile");
    while (true) {
        unsigned value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || next == p) {
            throw DomainError("malformed profile '" + text + "'");
        }
        counts.push_back(value);
        p = next;
        if (p == end) break;
        if (*p != ',') throw DomainError("malformed profile '" + text + "'");
        ++p;
    }
    return ColorProfile(std::move(counts));
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
    BigInt out;
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
    return out;
}

namespace {

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator, const char* what) {
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
        throw IntegralityViolation(std::string(what) + ": " + numerator.get_str() +
                                   " not divisible by " + denominator.get_str());
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return out;
}

}  // namespace

BigInt closed_form_count(const ColorProfile& profile, unsigned n) {
    if (n == 0) throw DomainError("closed_form_count requires n >= 1");
    const std::uint64_t top = static_cast<std::uint64_t>(profile.total()) + n;
    BigInt product = n;
    for (unsigned p : profile.counts()) product *= binomial(top, p);
    return exact_quotient(product, BigInt(static_cast<unsigned long>(top)), "closed_form_count");
}

BigInt fuss_catalan_total(unsigned d, unsigned vertices) {
    if (d < 2) throw DomainError("fuss_catalan_total requires d >= 2");
    if (vertices < 1) throw DomainError("fuss_catalan_total requires at least one vertex");
    const std::uint64_t top = static_cast<std::uint64_t>(d) * vertices + 1;
    return exact_quotient(binomial(top, vertices), BigInt(static_cast<unsigned long>(top)),
                          "fuss_catalan_total");
}

BigInt narayana(unsigned n, unsigned k) {
    if (k < 1 || k > n) {
        throw DomainError("narayana(n, k) requires 1 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    }
    return exact_quotient(binomial(n, k) * binomial(n, k - 1), BigInt(n), "narayana");
}

namespace {

void profiles_rec(std::vector<unsigned>& counts, unsigned index, unsigned remaining,
                  const std::function<void(const ColorProfile&)>& visit) {
    if (index + 1 == counts.size()) {
        counts[index] = remaining;
        visit(ColorProfile(counts));
        return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
        counts[index] = c;
        profiles_rec(counts, index + 1, remaining - c, visit);
    }
}

}  // namespace

void for_each_profile_with_total(unsigned d, unsigned total,
                                 const std::function<void(const ColorProfile&)>& visit) {
    if (d < 2 || d > kHardMaxColors) throw DomainError("unsupported number of colors");
    std::vector<unsigned> counts(d, 0);
    profiles_rec(counts, 0, total, visit);
}

std::vector<ColorProfile> profiles_up_to(unsigned d, unsigned max_total) {
    std::vector<ColorProfile> out;
    for (unsigned t = 0; t <= max_total; ++t) {
        for_each_profile_with_total(d, t, [&](const ColorProfile& p) { out.push_back(p); });
    }
    return out;
}

}  // namespace colortree
