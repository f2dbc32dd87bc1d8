#include <pea/zoo.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace pea {

namespace {

void guard_size(std::size_t n, const std::string& what) {
    if (n > kMaxElements)
        throw Error(Errc::SizeLimitExceeded,
                    what + " would have " + std::to_string(n) + " elements (limit " + std::to_string(kMaxElements) + ")");
}

std::vector<SumTriple> zero_sums(std::size_t n, Element zero) {
    std::vector<SumTriple> out;
    for (Element x = 0; x < n; ++x) {
        out.push_back({zero, x, x});
        out.push_back({x, zero, x});
    }
    return out;
}

}  // namespace

PseudoEffectAlgebra boolean_algebra(unsigned n) {
    if (n == 0) throw Error(Errc::UnknownZooName, "boolean(n) needs n >= 1");
    if (n > 12) guard_size(std::size_t(1) << std::min(n, 63u), "boolean(" + std::to_string(n) + ")");
    const Element size = Element(1) << n;
    std::vector<std::string> labels;
    for (Element x = 0; x < size; ++x) {
        std::string l(n, '0');
        for (unsigned i = 0; i < n; ++i)
            if (x >> i & 1) l[n - 1 - i] = '1';
        labels.push_back(std::move(l));
    }
    std::vector<SumTriple> triples;
    for (Element a = 0; a < size; ++a)
        for (Element b = 0; b < size; ++b)
            if ((a & b) == 0) triples.push_back({a, b, a | b});
    return build_algebra(std::move(labels), 0, size - 1, std::move(triples));
}

PseudoEffectAlgebra chain_algebra(unsigned n) {
    if (n == 0) throw Error(Errc::UnknownZooName, "chain(n) needs n >= 1");
    guard_size(std::size_t(n) + 1, "chain(" + std::to_string(n) + ")");
    std::vector<std::string> labels;
    for (unsigned i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<SumTriple> triples;
    for (Element a = 0; a <= n; ++a)
        for (Element b = 0; a + b <= n; ++b) triples.push_back({a, b, a + b});
    return build_algebra(std::move(labels), 0, n, std::move(triples));
}

PseudoEffectAlgebra diamond_algebra() {
    std::vector<std::string> labels{"0", "a", "a'", "b", "b'", "1"};
    auto triples = zero_sums(labels.size(), 0);
    triples.insert(triples.end(), {{1, 2, 5}, {2, 1, 5}, {3, 4, 5}, {4, 3, 5}});
    return build_algebra(std::move(labels), 0, 5, std::move(triples));
}

PseudoEffectAlgebra horizontal_sum(const PseudoEffectAlgebra& left, const PseudoEffectAlgebra& right) {
    guard_size(left.size() + right.size() - 2, "horizontal_sum");
    std::vector<std::string> labels{"0", "1"};
    auto embed = [&](const PseudoEffectAlgebra& part, const std::string& prefix) {
        std::vector<Element> map(part.size());
        for (Element x = 0; x < part.size(); ++x) {
            if (x == part.zero()) map[x] = 0;
            else if (x == part.one()) map[x] = 1;
            else {
                map[x] = Element(labels.size());
                labels.push_back(prefix + part.label(x));
            }
        }
        return map;
    };
    const auto lmap = embed(left, "L:");
    const auto rmap = embed(right, "R:");
    std::vector<SumTriple> triples;
    for (const auto& t : left.sums()) triples.push_back({lmap[t.a], lmap[t.b], lmap[t.c]});
    for (const auto& t : right.sums()) triples.push_back({rmap[t.a], rmap[t.b], rmap[t.c]});
    return build_algebra(std::move(labels), 0, 1, std::move(triples));
}

PseudoEffectAlgebra product(const PseudoEffectAlgebra& left, const PseudoEffectAlgebra& right) {
    const std::size_t n2 = right.size();
    guard_size(left.size() * n2, "product");
    std::vector<std::string> labels;
    for (Element x = 0; x < left.size(); ++x)
        for (Element y = 0; y < n2; ++y) labels.push_back("(" + left.label(x) + "," + right.label(y) + ")");
    auto at = [&](Element x, Element y) { return Element(x * n2 + y); };
    std::vector<SumTriple> triples;
    for (const auto& s : left.sums())
        for (const auto& t : right.sums()) triples.push_back({at(s.a, t.a), at(s.b, t.b), at(s.c, t.c)});
    return build_algebra(std::move(labels), at(left.zero(), right.zero()), at(left.one(), right.one()),
                         std::move(triples));
}

PseudoEffectAlgebra interval_algebra(const PoGroupSpec& spec) {
    const std::size_t k = spec.unit.size();
    if (k == 0) throw Error(Errc::NotStrongUnit, "the group Z^0 has no strong unit");
    if (spec.order == GroupOrder::Lexicographic && k > 1) {
        // positive cone: first nonzero coordinate > 0
        const auto lead = std::find_if(spec.unit.begin(), spec.unit.end(), [](long x) { return x != 0; });
        if (lead == spec.unit.end() || *lead < 0) throw Error(Errc::NotStrongUnit, "u is not positive");
        if (lead != spec.unit.begin())
            throw Error(Errc::NotStrongUnit, "(1,0,...,0) is not below any multiple of u");
        throw Error(Errc::IntervalInfinite, "[0,u] contains (0,n,0,...) for every n >= 0");
    }
    for (long x : spec.unit)
        if (x <= 0) throw Error(Errc::NotStrongUnit, "every coordinate of u must be positive");

    std::size_t size = 1;
    for (long x : spec.unit) {
        size *= std::size_t(x) + 1;
        guard_size(size, "interval");
    }
    // mixed radix, first coordinate most significant
    auto decode = [&](Element index) {
        std::vector<long> v(k);
        for (std::size_t i = k; i-- > 0;) {
            v[i] = long(index % (spec.unit[i] + 1));
            index /= Element(spec.unit[i] + 1);
        }
        return v;
    };
    auto encode = [&](const std::vector<long>& v) {
        Element index = 0;
        for (std::size_t i = 0; i < k; ++i) index = index * Element(spec.unit[i] + 1) + Element(v[i]);
        return index;
    };
    std::vector<std::string> labels;
    std::vector<std::vector<long>> points;
    for (Element i = 0; i < size; ++i) {
        auto v = decode(i);
        std::string l = k == 1 ? std::to_string(v[0]) : "(";
        if (k > 1) {
            for (std::size_t j = 0; j < k; ++j) l += (j ? "," : "") + std::to_string(v[j]);
            l += ")";
        }
        labels.push_back(std::move(l));
        points.push_back(std::move(v));
    }
    std::vector<SumTriple> triples;
    for (Element a = 0; a < size; ++a)
        for (Element b = 0; b < size; ++b) {
            std::vector<long> s(k);
            bool below = true;
            for (std::size_t j = 0; j < k && below; ++j) {
                s[j] = points[a][j] + points[b][j];
                below = s[j] <= spec.unit[j];
            }
            if (below) triples.push_back({a, b, encode(s)});
        }
    return build_algebra(std::move(labels), 0, Element(size - 1), std::move(triples));
}

namespace {

// expr := name [ '(' arg {',' arg} ')' ];  arg := integer | expr
class ZooParser {
public:
    explicit ZooParser(std::string_view text) : text_(text) {}

    PseudoEffectAlgebra parse_all() {
        auto e = expression();
        skip_space();
        if (pos_ != text_.size()) throw error("trailing input");
        return e;
    }

private:
    Error error(const std::string& what) const {
        return Error(Errc::Parse, "zoo expression '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw error(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw error("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    long integer() {
        skip_space();
        long value = 0;
        const char* first = text_.data() + pos_;
        const auto [end, ec] = std::from_chars(first, text_.data() + text_.size(), value);
        if (ec != std::errc()) throw error("expected an integer");
        pos_ += std::size_t(end - first);
        return value;
    }

    unsigned small_count(long value, const std::string& name) {
        if (value < 1 || value > 1 << 20) throw Error(Errc::UnknownZooName, name + " needs a positive size");
        return unsigned(value);
    }

    PseudoEffectAlgebra expression() {
        const std::string name = identifier();
        if (name == "diamond") {
            if (accept('(')) expect(')');
            return diamond_algebra();
        }
        if (name == "boolean" || name == "chain") {
            expect('(');
            const unsigned n = small_count(integer(), name);
            expect(')');
            return name == "boolean" ? boolean_algebra(n) : chain_algebra(n);
        }
        if (name == "horizontal_sum" || name == "product") {
            expect('(');
            auto left = expression();
            expect(',');
            auto right = expression();
            expect(')');
            return name == "product" ? product(left, right) : horizontal_sum(left, right);
        }
        if (name == "interval") {
            expect('(');
            PoGroupSpec spec;
            const std::string order = identifier();
            if (order == "coordinatewise") spec.order = GroupOrder::Coordinatewise;
            else if (order == "lexicographic") spec.order = GroupOrder::Lexicographic;
            else throw Error(Errc::UnknownZooName, "unknown group order '" + order + "'");
            while (accept(',')) spec.unit.push_back(integer());
            expect(')');
            return interval_algebra(spec);
        }
        throw Error(Errc::UnknownZooName, "no zoo entry named '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PseudoEffectAlgebra zoo(std::string_view expression) { return ZooParser(expression).parse_all(); }

}  // namespace pea
