#include "oqsym/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace oqsym {

namespace {

void check_parts(const std::vector<std::uint32_t>& parts) {
    for (std::uint32_t p : parts) {
        if (p == 0) throw std::invalid_argument("composition parts must be positive");
    }
}

}  // namespace

Composition::Composition(std::initializer_list<std::uint32_t> parts) : parts_(parts) {
    check_parts(parts_);
}

Composition::Composition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
}

std::uint64_t Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::strong_ordering Composition::operator<=>(const Composition& other) const {
    return std::lexicographical_compare_three_way(parts_.begin(), parts_.end(),
                                                  other.parts_.begin(), other.parts_.end());
}

std::string Composition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

Composition Composition::parse(std::string_view text) {
    std::vector<std::uint32_t> parts;
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') throw std::invalid_argument("unbalanced composition: " + std::string(text));
        std::string_view body = text.substr(1, text.size() - 2);
        while (!body.empty()) {
            std::size_t comma = body.find(',');
            std::string_view tok = body.substr(0, comma);
            std::uint32_t value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw std::invalid_argument("bad composition part: " + std::string(tok));
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
    } else {
        // compact digit string, single-digit parts only
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("compact composition needs digits 1-9: " + std::string(text));
            parts.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    }
    return Composition(std::move(parts));
}

Composition concat(const Composition& a, const Composition& b) {
    std::vector<std::uint32_t> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

Composition dotplus(const Composition& a, const Composition& b) {
    const auto& ap = a.parts();
    const auto& bp = b.parts();
    std::vector<std::uint32_t> parts(std::max(ap.size(), bp.size()), 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i < ap.size()) parts[i] += ap[i];
        if (i < bp.size()) parts[i] += bp[i];
    }
    return Composition(std::move(parts));
}

Composition reversed(const Composition& a) {
    std::vector<std::uint32_t> parts(a.parts().rbegin(), a.parts().rend());
    return Composition(std::move(parts));
}

std::size_t CompositionHash::operator()(const Composition& c) const {
    // FNV-1a over the parts
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t p : c.parts()) {
        h ^= p;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace oqsym
