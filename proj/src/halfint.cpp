#include "qsu2/halfint.hpp"

#include <cctype>

namespace qsu2 {

HalfInt HalfInt::parse(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("expected a spin like \"3/2\" or \"2\", got \"" + text + "\"");
    };

    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) throw bad();

    long numerator = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        numerator = numerator * 10 + (text[pos] - '0');
        if (numerator > 1000000) throw bad();
        ++pos;
    }

    long denominator = 1;
    if (pos < text.size()) {
        if (text[pos] != '/') throw bad();
        ++pos;
        if (pos + 1 != text.size() || text[pos] != '2') throw bad();
        denominator = 2;
        ++pos;
    }

    long twice = denominator == 2 ? numerator : 2 * numerator;
    if (negative) twice = -twice;
    return HalfInt(static_cast<int>(twice));
}

std::vector<HalfInt> weights_descending(HalfInt j) {
    std::vector<HalfInt> out;
    out.reserve(static_cast<std::size_t>(j.twice) + 1);
    for (int t = j.twice; t >= -j.twice; t -= 2) out.push_back(HalfInt(t));
    return out;
}

}  // namespace qsu2
