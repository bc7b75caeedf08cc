/*
   Copyright 2026 The skewlcp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cctype>
#include <map>
#include <mutex>
#include <string_view>
#include <unordered_map>

#include "skewlcp/cli.hpp"

namespace skewlcp::cli {

namespace {

constexpr u128 kLogTableLimit = u128{1} << 20;
constexpr std::uint64_t kMaxPolyPower = 4096;

class Parser {
   public:
    // var names the field generator (may be empty), xvar the ring variable.
    Parser(const RingPtr& ring, const std::string& var, std::string_view text, const std::string& xvar = "x")
        : ring_(ring), var_(var), xvar_(xvar), s_(text) {
        if (!var_.empty() && (var_.starts_with(xvar_) || xvar_.starts_with(var_)))
            throw InputError("field variable '" + var_ + "' clashes with '" + xvar_ + "'");
    }

    SkewPoly parse() {
        SkewPoly p = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool at_var() const { return !var_.empty() && s_.substr(pos_).starts_with(var_); }
    bool at_xvar() const { return s_.substr(pos_).starts_with(xvar_); }
    bool starts_atom() {
        const char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || at_xvar() || at_var();
    }

    SkewPoly sum() {
        SkewPoly acc = SkewPoly::zero(ring_);
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
        acc = neg ? -product() : product();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            SkewPoly t = product();
            acc = c == '+' ? acc + t : acc - t;
        }
    }

    SkewPoly product() {
        SkewPoly acc = power();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc = acc * power();
            } else if (starts_atom()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    SkewPoly power() {
        SkewPoly b = atom();
        if (peek() != '^') return b;
        ++pos_;
        const bool braced = peek() == '{';
        if (braced) ++pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        const std::uint64_t e = digits();
        if (braced && peek() != '}') fail("missing }");
        if (braced) ++pos_;
        const ExtField& f = ring_->field();
        if (b.degree() <= 0) {
            Elem c = b.coeff(0);
            if (neg) {
                if (f.is_zero(c)) fail("zero to a negative power");
                c = f.inv(c);
            }
            return SkewPoly::constant(ring_, f.pow(c, e));
        }
        if (neg) fail("negative power of a polynomial");
        if (e > kMaxPolyPower) fail("exponent too large for a polynomial");
        SkewPoly r = SkewPoly::one(ring_);
        for (std::uint64_t i = 0; i < e; ++i) r = r * b;
        return r;
    }

    std::uint64_t digits() {
        skip();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (UINT64_MAX - 9) / 10) fail("number too large");
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    SkewPoly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            SkewPoly inner = sum();
            if (peek() != ')') fail("missing )");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = digits();
            return SkewPoly::constant(ring_, ring_->field().scalar(v % ring_->field().characteristic()));
        }
        if (at_var()) {
            pos_ += var_.size();
            return SkewPoly::constant(ring_, ring_->field().generator());
        }
        if (at_xvar()) {
            pos_ += xvar_.size();
            return SkewPoly::x_pow(ring_, 1);
        }
        fail("expected a term");
    }

    const RingPtr& ring_;
    const std::string& var_;
    std::string xvar_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

// generator^k for every nonzero element, keyed by packed index
struct LogTable {
    std::vector<std::int64_t> log;
};

const LogTable* log_table(const ExtField& f) {
    if (f.order() > kLogTableLimit) return nullptr;
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, LogTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(f.characteristic(), f.modulus());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.log.empty() ? nullptr : &it->second;
    LogTable t;
    const auto q = static_cast<std::size_t>(f.order());
    t.log.assign(q, -1);
    Elem g = f.one();
    for (std::size_t k = 0; k + 1 < q; ++k) {
        auto& slot = t.log[static_cast<std::size_t>(f.index(g))];
        if (slot >= 0) break;  // generator is not primitive
        slot = static_cast<std::int64_t>(k);
        g = f.mul(g, f.generator());
    }
    for (std::size_t i = 1; i < q; ++i)
        if (t.log[i] < 0) t.log.clear();  // generator is not primitive; cached as absent
    const LogTable& stored = cache.emplace(key, std::move(t)).first->second;
    return stored.log.empty() ? nullptr : &stored;
}

std::int64_t json_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

}  // namespace

SkewPoly parse_expression(const RingPtr& ring, const std::string& var, const std::string& text) {
    return Parser(ring, var, text).parse();
}

std::vector<std::uint32_t> parse_modulus(std::uint32_t p, const std::string& name, const json& j) {
    if (j.is_array()) {
        std::vector<std::uint32_t> c;
        for (const auto& v : j) {
            const auto x = json_int(v, "modulus coefficient");
            if (x < 0 || x >= static_cast<std::int64_t>(p)) throw InputError("modulus coefficient out of range");
            c.push_back(static_cast<std::uint32_t>(x));
        }
        return c;
    }
    if (!j.is_string()) throw InputError("modulus must be an array or a polynomial in the field variable");
    FieldPtr fp;
    try {
        fp = ExtField::create(p, {0, 1});
    } catch (const FieldError& e) {
        throw InputError(e.what());
    }
    auto ring = make_ring(FieldAut(fp, 0));
    SkewPoly m = Parser(ring, "", j.get<std::string>(), name).parse();
    std::vector<std::uint32_t> c;
    for (const auto& e : m.coeffs()) c.push_back(e[0]);
    return c;
}

Elem parse_element(const RingPtr& ring, const std::string& var, const json& j) {
    const ExtField& f = ring->field();
    const auto p = static_cast<std::int64_t>(f.characteristic());
    if (j.is_array()) {
        if (j.size() > f.degree()) throw InputError("coefficient array longer than the field degree");
        std::vector<std::uint32_t> c;
        for (const auto& v : j) {
            const auto x = json_int(v, "coefficient");
            if (x < 0 || x >= p) throw InputError("coefficient out of range for GF(" + std::to_string(p) + ")");
            c.push_back(static_cast<std::uint32_t>(x));
        }
        return f.from_coeffs(c);
    }
    if (j.is_object()) {
        if (!j.contains("gen_pow") || j.size() != 1) throw InputError("element object must be {\"gen_pow\": e}");
        const auto e = json_int(j["gen_pow"], "gen_pow");
        const auto m = static_cast<std::int64_t>(static_cast<std::uint64_t>(f.order() - 1));
        return f.gen_pow(static_cast<u128>(((e % m) + m) % m));
    }
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        return f.scalar(static_cast<std::uint64_t>(((v % p) + p) % p));
    }
    if (j.is_string()) {
        SkewPoly e = parse_expression(ring, var, j.get<std::string>());
        if (e.degree() > 0) throw InputError("element expression mentions x: " + j.get<std::string>());
        return e.coeff(0);
    }
    throw InputError("unrecognised element: " + j.dump());
}

SkewPoly parse_poly(const RingPtr& ring, const std::string& var, const json& j) {
    if (j.is_string()) return parse_expression(ring, var, j.get<std::string>());
    if (!j.is_array()) throw InputError("polynomial must be an array of elements or a string");
    std::vector<Elem> c;
    for (const auto& e : j) c.push_back(parse_element(ring, var, e));
    return SkewPoly(ring, std::move(c));
}

json element_json(const ExtField& f, const Elem& a) { return json(f.coeffs(a)); }

json poly_json(const SkewPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(element_json(p.field(), c));
    return out;
}

json exponents_json(const SkewPoly& p) {
    const LogTable* t = log_table(p.field());
    json out = json::array();
    if (!t) return out;
    for (const auto& c : p.coeffs()) {
        if (p.field().is_zero(c))
            out.push_back(nullptr);
        else
            out.push_back(t->log[static_cast<std::size_t>(p.field().index(c))]);
    }
    return out;
}

std::string format_powers(const SkewPoly& p, const std::string& var) {
    const ExtField& f = p.field();
    const LogTable* t = log_table(f);
    if (!t) return p.format();
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Elem& c = p.coeffs()[k];
        if (f.is_zero(c)) continue;
        if (!out.empty()) out += " + ";
        const auto e = t->log[static_cast<std::size_t>(f.index(c))];
        std::string coef = e == 0 ? "" : e == 1 ? var : var + "^" + std::to_string(e);
        if (k == 0) {
            out += coef.empty() ? "1" : coef;
            continue;
        }
        out += coef + "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace skewlcp::cli
