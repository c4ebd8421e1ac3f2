#include "pms/dyadic.hpp"

#include <cctype>

namespace pms {

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty dyadic literal");
    auto bad = [&] { throw std::invalid_argument("bad dyadic literal: " + text); };

    std::size_t slash = text.find('/');
    std::string num_part = text.substr(0, slash);
    if (num_part.empty()) bad();
    std::size_t i = (num_part[0] == '-' || num_part[0] == '+') ? 1 : 0;
    if (i == num_part.size()) bad();
    for (; i < num_part.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(num_part[i]))) bad();

    BigInt num{num_part};
    if (slash == std::string::npos) return Dyadic{num, 0};

    std::string den_part = text.substr(slash + 1);
    if (den_part == "2") return Dyadic{num, 1};
    if (den_part.size() < 3 || den_part.substr(0, 2) != "2^") bad();
    std::string exp_part = den_part.substr(2);
    if (exp_part.empty()) bad();
    for (char c : exp_part)
        if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    unsigned long e = std::stoul(exp_part);
    if (e > UINT32_MAX) bad();
    return Dyadic{num, static_cast<std::uint32_t>(e)};
}

DyadicRatio DyadicRatio::of(const Dyadic& a, const Dyadic& b) {
    if (b.is_zero()) throw std::domain_error("ratio with zero denominator");
    DyadicRatio r;
    std::uint32_t e = std::max(a.exp(), b.exp());
    r.num = boost::multiprecision::abs(a.num()) << (e - a.exp());
    r.den = boost::multiprecision::abs(b.num()) << (e - b.exp());
    return r;
}

}  // namespace pms
