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

#include <cstdlib>

#include "skewlcp/duality.hpp"
#include "skewlcp/isometry.hpp"
#include "skewlcp/cli.hpp"

namespace skewlcp::cli {

namespace {

const json& need(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
    return obj[key];
}

std::size_t need_size(const json& obj, const char* key, const std::string& where) {
    const json& v = need(obj, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw InputError(where + ": \"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

std::string need_string(const json& obj, const char* key, const std::string& where) {
    const json& v = need(obj, key, where);
    if (!v.is_string()) throw InputError(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

FieldPtr field_from(const json& spec, const std::string& where) {
    const std::size_t p = need_size(spec, "p", where);
    const std::string name = need_string(spec, "name", where);
    if (p < 2 || p > kMaxCharacteristic) throw InputError(where + ": unsupported characteristic");
    auto mod = parse_modulus(static_cast<std::uint32_t>(p), name, need(spec, "modulus", where));
    return ExtField::create(static_cast<std::uint32_t>(p), std::move(mod), name);
}

json field_json(const ExtField& f) {
    return json{{"p", f.characteristic()}, {"modulus", f.modulus()}, {"name", f.name()}};
}

BoundProvenance provenance_from(const std::string& s) {
    if (s == to_string(BoundProvenance::BchDesigned)) return BoundProvenance::BchDesigned;
    if (s == to_string(BoundProvenance::ExternallyAsserted)) return BoundProvenance::ExternallyAsserted;
    if (s == to_string(BoundProvenance::Computed)) return BoundProvenance::Computed;
    throw InputError("unknown bound provenance \"" + s + "\"");
}

std::vector<std::size_t> index_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": indices must be an array");
    std::vector<std::size_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw InputError(where + ": bad index");
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

}  // namespace

std::uint64_t default_seed() {
    const char* s = std::getenv("SKEWLCP_SEED");
    if (!s || !*s) return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end) throw InputError("SKEWLCP_SEED must be a non-negative integer");
    return v;
}

const NamedCode& Context::named(const std::string& name) const {
    for (const auto& c : codes_)
        if (c.name == name) return c;
    throw InputError("no code named \"" + name + "\"");
}

RingPtr Context::base_ring() const { return make_ring(tower_->sigma()); }
RingPtr Context::top_ring() const { return make_ring(tower_->theta()); }

Context load_manifest(const json& m, std::uint64_t seed) {
    if (!m.is_object()) throw InputError("manifest must be a JSON object");
    Context ctx;
    json canon = json::object();
    try {
        // tower
        const json& t = need(m, "tower", "manifest");
        json tc = json::object();
        if (t.contains("field")) {
            FieldPtr f = field_from(t["field"], "tower.field");
            const std::size_t j = need_size(t, "sigma_exponent", "tower"), s = need_size(t, "s", "tower");
            ctx.tower_ = FieldTower::build(f, j, s);
            ctx.base_var_ = f->name();
            ctx.top_var_ = t.contains("top_name") ? need_string(t, "top_name", "tower") : "l";
            tc["field"] = field_json(*f);
            tc["sigma_exponent"] = j;
            tc["s"] = s;
            if (t.contains("top_name")) tc["top_name"] = ctx.top_var_;
        } else if (t.contains("top")) {
            FieldPtr l = field_from(t["top"], "tower.top");
            const std::size_t th = need_size(t, "theta_exponent", "tower"), mu = need_size(t, "mu", "tower");
            ctx.top_var_ = l->name();
            ctx.base_var_ = t.contains("base_name") ? need_string(t, "base_name", "tower") : "b";
            std::optional<Elem> fg;
            auto lring = make_ring(FieldAut(l, th));
            if (t.contains("base_generator")) fg = parse_element(lring, ctx.top_var_, t["base_generator"]);
            ctx.tower_ = FieldTower::from_top(l, th, mu, fg, ctx.base_var_);
            tc["top"] = field_json(*l);
            tc["theta_exponent"] = th;
            tc["mu"] = mu;
            if (fg) tc["base_generator"] = element_json(*l, *fg);
            tc["base_name"] = ctx.base_var_;
        } else {
            throw InputError("tower: expected \"field\" or \"top\"");
        }
        canon["tower"] = tc;

        const Elem lambda = m.contains("lambda") ? ctx.base_element(m["lambda"]) : ctx.tower_->F().one();
        ctx.ring_ = CodeRing::create(ctx.tower_, lambda);
        canon["lambda"] = element_json(ctx.tower_->F(), lambda);

        // codes, each may refer to the ones before it
        json codes = json::array();
        const json& cs = m.contains("codes") ? m["codes"] : json::array();
        if (!cs.is_array()) throw InputError("codes must be an array");
        for (const auto& c : cs) {
            const std::string name = need_string(c, "name", "code");
            const std::string where = "code " + name;
            for (const auto& o : ctx.codes_)
                if (o.name == name) throw InputError(where + ": duplicate name");
            json cc = json{{"name", name}};
            std::optional<Code> code;
            std::optional<BchSpec> bch;
            std::optional<SkewPoly> given;
            auto u_alpha = [&](const json& spec, const CodeRingPtr& ring, json& out) {
                const Elem u = spec.contains("u") ? ctx.top_element(spec["u"]) : *w_polynomial_context(*ring, seed);
                const Elem alpha = spec.contains("alpha") ? ctx.top_element(spec["alpha"]) : cyclic_vector(*ctx.tower_, u, seed);
                out["u"] = element_json(ctx.tower_->L(), u);
                out["alpha"] = element_json(ctx.tower_->L(), alpha);
                return std::make_pair(u, alpha);
            };
            if (c.contains("generator")) {
                CodeRingPtr ring = ctx.ring_;
                if (c.contains("lambda")) {
                    ring = ring->with_lambda(ctx.base_element(c["lambda"]));
                    cc["lambda"] = element_json(ctx.tower_->F(), ring->lambda());
                }
                const SkewPoly g = ctx.base_poly(c["generator"]);
                if (g.is_zero()) throw InputError(where + ": zero generator");
                code = Code::from_generator(ring, g);
                given = g;
                cc["generator"] = poly_json(g);
            } else if (c.contains("bch")) {
                const json& b = c["bch"];
                json bc = json::object();
                auto [u, alpha] = u_alpha(b, ctx.ring_, bc);
                BchSpec spec{ctx.ring_, u, alpha, need_size(b, "r", where), need_size(b, "delta", where)};
                bc["r"] = spec.r;
                bc["delta"] = spec.delta;
                code = bch_generator(spec);
                bch = spec;
                cc["bch"] = bc;
            } else if (c.contains("bch_indices")) {
                const json& b = c["bch_indices"];
                json bc = json::object();
                auto [u, alpha] = u_alpha(b, ctx.ring_, bc);
                auto idx = index_list(need(b, "indices", where), where);
                code = bch_code(ctx.ring_, u, alpha, idx);
                bc["indices"] = idx;
                cc["bch_indices"] = bc;
            } else if (c.contains("dual_of")) {
                const std::string of = need_string(c, "dual_of", where);
                code = dual(ctx.code(of));
                cc["dual_of"] = of;
            } else if (c.contains("image_of")) {
                const std::string of = need_string(c, "image_of", where);
                const Code& src = ctx.code(of);
                const Elem beta = c.contains("beta") ? ctx.base_element(c["beta"]) : ctx.tower_->F().one();
                const std::size_t i = c.contains("i") ? need_size(c, "i", where) : 0;
                code = act_on_code({beta, i}, src);
                cc["image_of"] = of;
                cc["beta"] = element_json(ctx.tower_->F(), beta);
                cc["i"] = i;
            } else {
                throw InputError(where + ": expected generator, bch, bch_indices, dual_of or image_of");
            }
            if (c.contains("bound")) {
                const json& b = c["bound"];
                DistanceBound db{need_size(b, "value", where + " bound"),
                                 provenance_from(need_string(b, "provenance", where + " bound"))};
                code = code->with_bound(db);
                cc["bound"] = json{{"value", db.value}, {"provenance", to_string(db.provenance)}};
            }
            ctx.codes_.push_back({name, *code, bch, given});
            codes.push_back(cc);
        }
        canon["codes"] = codes;
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(e.what());
    }
    ctx.task_ = m.contains("task") ? m["task"] : json::object();
    if (!ctx.task_.is_object()) throw InputError("task must be an object");
    canon["task"] = ctx.task_;
    if (m.contains("expect")) {
        ctx.expect_ = m["expect"];
        canon["expect"] = ctx.expect_;
    }
    ctx.canonical_ = std::move(canon);
    return ctx;
}

}  // namespace skewlcp::cli
