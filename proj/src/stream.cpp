#include "pms/stream.hpp"

#include <stdexcept>

namespace pms {

struct CompletionPoint::State {
    Arity arity;
    std::string provenance;
    mutable std::mutex mu;
    mutable std::vector<Letter> cache;
    std::function<Letter()> next;  // null for fully materialized tails
    Letter tail = 0;               // used when next is null
    bool has_tail = false;
};

CompletionPoint CompletionPoint::eventually_constant(Arity arity,
                                                     std::vector<Letter> prefix,
                                                     Letter tail) {
    for (Letter m : prefix)
        if (m >= letter_count(arity)) throw std::invalid_argument("letter out of range");
    if (tail >= letter_count(arity)) throw std::invalid_argument("tail letter out of range");
    CompletionPoint p;
    p.state_ = std::make_shared<State>();
    p.state_->arity = arity;
    p.state_->provenance = "explicit-list-with-tail";
    p.state_->cache = std::move(prefix);
    p.state_->tail = tail;
    p.state_->has_tail = true;
    return p;
}

CompletionPoint CompletionPoint::generated(Arity arity, std::function<Letter()> next,
                                           std::string provenance) {
    CompletionPoint p;
    p.state_ = std::make_shared<State>();
    p.state_->arity = arity;
    p.state_->provenance = std::move(provenance);
    p.state_->next = std::move(next);
    return p;
}

Arity CompletionPoint::arity() const { return state_->arity; }
const std::string& CompletionPoint::provenance() const { return state_->provenance; }

Letter CompletionPoint::letter_at(int index) const {
    if (index < 1) throw std::invalid_argument("stream index is 1-based");
    const State& st = *state_;
    std::size_t need = static_cast<std::size_t>(offset_ + index);
    std::lock_guard<std::mutex> lock(st.mu);
    while (st.cache.size() < need) {
        if (st.has_tail)
            st.cache.push_back(st.tail);
        else {
            Letter m = st.next();
            if (m >= letter_count(st.arity))
                throw std::domain_error("stream produced a letter outside the alphabet");
            st.cache.push_back(m);
        }
    }
    return st.cache[need - 1];
}

CompletionPoint CompletionPoint::shifted() const {
    letter_at(1);  // force the head so the shifted view is well defined
    CompletionPoint p = *this;
    p.offset_ = offset_ + 1;
    return p;
}

CompletionPoint CompletionPoint::parse(const std::string& text,
                                       std::optional<Arity> expected) {
    std::size_t open = text.find('(');
    if (open == std::string::npos || text.size() < open + 4 ||
        text.substr(text.size() - 2) != ")*" || text.size() - 2 != open + 2)
        throw std::invalid_argument("stream literal must look like \"llr(r)*\": " + text);
    char tail_ch = text[open + 1];
    std::string prefix = text.substr(0, open);

    std::optional<Arity> arity = expected;
    auto letter_arity = [](char c) -> Arity {
        if (c == 'l' || c == 'r') return Arity::Two;
        if (c == 'a' || c == 'b' || c == 'c') return Arity::Three;
        throw std::invalid_argument(std::string("invalid letter '") + c + "'");
    };
    for (char c : prefix) {
        Arity la = letter_arity(c);
        if (arity && *arity != la)
            throw std::invalid_argument("mixed alphabets in stream: " + text);
        arity = la;
    }
    Arity ta = letter_arity(tail_ch);
    if (arity && *arity != ta)
        throw std::invalid_argument("mixed alphabets in stream: " + text);
    arity = ta;

    std::vector<Letter> letters;
    for (char c : prefix) letters.push_back(static_cast<Letter>(letter_index(*arity, c)));
    return eventually_constant(*arity, std::move(letters),
                               static_cast<Letter>(letter_index(*arity, tail_ch)));
}

AddressWord truncate(const CompletionPoint& s, int p) {
    if (p < 1)
        throw std::invalid_argument("truncation depth must be at least 1");
    AddressWord w;
    w.arity = s.arity();
    w.letters.reserve(p);
    for (int i = 1; i <= p; ++i) w.letters.push_back(s.letter_at(i));
    w.base = static_cast<BaseSymbol>(w.letters.back());
    return w;
}

std::pair<Letter, CompletionPoint> psi(const CompletionPoint& s) {
    return {s.letter_at(1), s.shifted()};
}

DistanceInterval completion_distance(const CompletionPoint& s,
                                     const CompletionPoint& t, int p) {
    if (s.arity() != t.arity())
        throw std::invalid_argument("completion_distance across alphabets");
    if (p < 1) throw std::invalid_argument("depth must be at least 1");
    Dyadic center = word_distance(truncate(s, p), truncate(t, p));
    Dyadic radius = p >= 2 ? Dyadic::half_pow(p - 1) : Dyadic{1};  // 2/2^p
    return {max(Dyadic{0}, center - radius), min(Dyadic{1}, center + radius)};
}

}  // namespace pms
