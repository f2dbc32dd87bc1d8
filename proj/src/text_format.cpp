#include <pea/text_format.hpp>
#include <pea/measures.hpp>

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pea {

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return Error(Errc::Parse, "not a rational: '" + std::string(text) + "'"); };
    const auto slash = text.find('/');
    auto integer = [&](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && s[0] == '-') i = 1;
        if (i == s.size()) throw bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
        return mpz_class(std::string(s));
    };
    const mpz_class num = integer(text.substr(0, slash), true);
    mpz_class den = 1;
    if (slash != std::string_view::npos) den = integer(text.substr(slash + 1), false);
    if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string join_values(std::span<const Rational> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += to_string(values[i]);
    }
    return out;
}

bool is_valid_label(std::string_view label) noexcept {
    if (label.empty() || label.front() == '[') return false;
    return std::none_of(label.begin(), label.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '=' || c == '#';
    });
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string word; in >> word;) out.push_back(word);
    return out;
}

// "key: value" -> value, if the line starts with key
std::optional<std::string_view> header_value(std::string_view line, std::string_view key) {
    if (line.substr(0, key.size()) != key) return std::nullopt;
    auto rest = trim(line.substr(key.size()));
    if (rest.empty() || rest.front() != ':') return std::nullopt;
    return trim(rest.substr(1));
}

Error parse_error(std::size_t line_no, const std::string& what) {
    return Error(Errc::Parse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

PseudoEffectAlgebra parse_algebra(std::string_view text) {
    std::optional<std::vector<std::string>> elements;
    std::optional<std::string> zero;
    std::optional<std::string> one;
    std::vector<LabeledTriple> triples;

    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        const std::size_t line_start = pos;
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        if (auto v = header_value(line, "elements")) {
            if (elements) throw parse_error(line_no, "repeated 'elements' header");
            elements = split_ws(*v);
            continue;
        }
        if (auto v = header_value(line, "zero")) {
            if (zero) throw parse_error(line_no, "repeated 'zero' header");
            zero = std::string(*v);
            continue;
        }
        if (auto v = header_value(line, "one")) {
            if (one) throw parse_error(line_no, "repeated 'one' header");
            one = std::string(*v);
            continue;
        }
        if (line.front() == '[') {
            if (!triples.empty()) throw parse_error(line_no, "JSON body mixed with triple lines");
            nlohmann::json body;
            try {
                body = nlohmann::json::parse(text.substr(line_start), nullptr, true, true);
            } catch (const nlohmann::json::exception& e) {
                throw parse_error(line_no, std::string("JSON body: ") + e.what());
            }
            if (!body.is_array()) throw parse_error(line_no, "JSON body must be an array");
            for (const auto& t : body) {
                if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string())
                    throw parse_error(line_no, "JSON triples must be arrays of three label strings");
                triples.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
            }
            pos = text.size();
            break;
        }
        const auto plus = line.find('+');
        const auto eq = line.find('=');
        if (plus == std::string_view::npos || eq == std::string_view::npos || eq < plus)
            throw parse_error(line_no, "expected 'a + b = c', got '" + std::string(line) + "'");
        LabeledTriple t{std::string(trim(line.substr(0, plus))), std::string(trim(line.substr(plus + 1, eq - plus - 1))),
                        std::string(trim(line.substr(eq + 1)))};
        for (const auto* s : {&t.a, &t.b, &t.c})
            if (!is_valid_label(*s)) throw parse_error(line_no, "bad label '" + *s + "'");
        triples.push_back(std::move(t));
    }
    if (!elements) throw Error(Errc::Parse, "missing 'elements' header");
    if (!zero) throw Error(Errc::Parse, "missing 'zero' header");
    if (!one) throw Error(Errc::Parse, "missing 'one' header");
    return build_algebra(std::move(*elements), *zero, *one, triples);
}

std::string export_algebra(const PseudoEffectAlgebra& algebra) {
    std::string out = "elements:";
    for (const auto& l : algebra.labels()) out += " " + l;
    out += "\nzero: " + algebra.label(algebra.zero()) + "\none: " + algebra.label(algebra.one()) + "\n";
    for (const auto& t : algebra.sums())
        out += algebra.label(t.a) + " + " + algebra.label(t.b) + " = " + algebra.label(t.c) + "\n";
    return out;
}

SignedMeasure parse_measure(const PseudoEffectAlgebra& algebra, std::string_view text) {
    std::optional<std::string> hash;
    std::vector<std::optional<Rational>> values(algebra.size());
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        if (auto v = header_value(line, "algebra")) {
            if (hash) throw parse_error(line_no, "repeated 'algebra' header");
            hash = std::string(*v);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw parse_error(line_no, "expected 'label = p/q'");
        const auto label = trim(line.substr(0, eq));
        const Element e = algebra.at(label);
        if (values[e]) throw Error(Errc::DuplicateLabel, "measure assigns '" + std::string(label) + "' twice", {e});
        values[e] = parse_rational(trim(line.substr(eq + 1)));
    }
    if (!hash) throw Error(Errc::Parse, "missing 'algebra' header");
    if (*hash != algebra.hash())
        throw Error(Errc::AlgebraMismatch, "measure refers to algebra " + *hash + ", loaded " + algebra.hash());
    RationalVector out;
    for (Element e = 0; e < algebra.size(); ++e) {
        if (!values[e]) throw Error(Errc::Parse, "no value for '" + algebra.label(e) + "'", {e});
        out.push_back(std::move(*values[e]));
    }
    return SignedMeasure(algebra, std::move(out));
}

std::string export_measure(const PseudoEffectAlgebra& algebra, const SignedMeasure& measure) {
    if (measure.algebra_hash() != algebra.hash()) throw Error(Errc::AlgebraMismatch, "measure of another algebra");
    std::string out = "algebra: " + algebra.hash() + "\n";
    for (Element e = 0; e < algebra.size(); ++e) out += algebra.label(e) + " = " + to_string(measure[e]) + "\n";
    return out;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        internal_error("SHA-256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(Errc::Io, "cannot read '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::Io, "cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(Errc::Io, "cannot write '" + path + "'");
}

}  // namespace pea
