#include "amalgam/instance.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "amalgam/suites.hpp"

namespace amalgam {

using nlohmann::json;

namespace {

[[noreturn]] void semantic_error(const std::string& where, const std::string& what) {
    fail(ErrorKind::invalid_parameter, "semantic error at " + where + ": " + what);
}

bool nonnegative_integer(const json& v) {
    return v.is_number_unsigned() ||
           (v.is_number_integer() && v.get<long long>() >= 0);
}

unsigned get_unsigned(const json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !nonnegative_integer(j[key]))
        semantic_error(where, "missing or non-integer field '" + key + "'");
    return j[key].get<unsigned>();
}

std::vector<unsigned> get_unsigned_list(const json& j, const std::string& key,
                                        const std::string& where) {
    if (!j.contains(key) || !j[key].is_array())
        semantic_error(where, "missing or non-array field '" + key + "'");
    std::vector<unsigned> result;
    for (const auto& v : j[key]) {
        if (!nonnegative_integer(v))
            semantic_error(where, "non-integer entry in '" + key + "'");
        result.push_back(v.get<unsigned>());
    }
    return result;
}

void validate_ring_tree(const json& tree, const std::string& where) {
    if (!tree.is_object() || !tree.contains("op") || !tree["op"].is_string())
        semantic_error(where, "ring constructor must be an object with 'op'");
    std::string op = tree["op"].get<std::string>();
    if (op == "zmod") {
        get_unsigned(tree, "n", where);
    } else if (op == "poly_quot") {
        get_unsigned(tree, "p", where);
        get_unsigned_list(tree, "modulus", where);
    } else if (op == "product") {
        if (!tree.contains("factors") || !tree["factors"].is_array() ||
            tree["factors"].size() < 2)
            semantic_error(where, "product needs at least two factors");
        for (const auto& f : tree["factors"]) validate_ring_tree(f, where + "/factors");
    } else if (op == "quotient") {
        if (!tree.contains("ring")) semantic_error(where, "quotient needs 'ring'");
        validate_ring_tree(tree["ring"], where + "/ring");
        get_unsigned_list(tree, "ideal_gens", where);
    } else if (op == "subring") {
        if (!tree.contains("ring")) semantic_error(where, "subring needs 'ring'");
        validate_ring_tree(tree["ring"], where + "/ring");
        get_unsigned_list(tree, "seeds", where);
    } else {
        semantic_error(where, "unknown ring constructor '" + op + "'");
    }
}

}  // namespace

InstanceSpec instance_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) semantic_error(where, "instance must be an object");
    if (!j.contains("format") || !j["format"].is_number() || j["format"] != 1)
        semantic_error(where, "missing or unsupported 'format' (expected 1)");
    if (!j.contains("kind") || !j["kind"].is_string())
        semantic_error(where, "missing 'kind'");

    InstanceSpec spec;
    spec.kind = j["kind"].get<std::string>();
    if (j.contains("label")) spec.label = j["label"].get<std::string>();
    if (j.contains("suites")) {
        for (const auto& s : j["suites"]) {
            if (!s.is_string() || !is_known_suite(s.get<std::string>()))
                semantic_error(where, "unknown suite name in 'suites'");
            spec.suites.push_back(s.get<std::string>());
        }
    }

    if (spec.kind == "finite") {
        if (!j.contains("A") || !j.contains("B"))
            semantic_error(where, "finite instance needs 'A' and 'B'");
        validate_ring_tree(j["A"], where + "/A");
        validate_ring_tree(j["B"], where + "/B");
        spec.a_tree = j["A"];
        spec.b_tree = j["B"];
        if (!j.contains("f") || !j["f"].is_object())
            semantic_error(where, "finite instance needs 'f'");
        const json& f = j["f"];
        if (f.contains("map")) {
            if (!f["map"].is_array()) semantic_error(where, "'f.map' must be an array");
        } else if (f.contains("images")) {
            if (!f["images"].is_array())
                semantic_error(where, "'f.images' must be an array of pairs");
            for (const auto& pair : f["images"])
                if (!pair.is_array() || pair.size() != 2)
                    semantic_error(where, "'f.images' entries must be [source, target]");
        } else {
            semantic_error(where, "'f' needs 'map' or 'images'");
        }
        spec.f_spec = f;
        for (unsigned g : get_unsigned_list(j, "J", where))
            spec.j_gens.push_back(static_cast<Elem>(g));
        if (j.contains("corrupt")) {
            const json& c = j["corrupt"];
            Corruption corruption;
            if (!c.contains("ring") || !c["ring"].is_string() ||
                (c["ring"] != "A" && c["ring"] != "B"))
                semantic_error(where, "'corrupt.ring' must be \"A\" or \"B\"");
            if (!c.contains("table") || (c["table"] != "add" && c["table"] != "mul"))
                semantic_error(where, "'corrupt.table' must be \"add\" or \"mul\"");
            corruption.ring = c["ring"].get<std::string>();
            corruption.table = c["table"].get<std::string>();
            corruption.row = static_cast<Elem>(get_unsigned(c, "row", where));
            corruption.col = static_cast<Elem>(get_unsigned(c, "col", where));
            corruption.value = static_cast<Elem>(get_unsigned(c, "value", where));
            spec.corrupt = corruption;
        }
    } else if (spec.kind == "semigroup") {
        spec.s_gens = get_unsigned_list(j, "S", where);
        spec.e_gens = get_unsigned_list(j, "E", where);
    } else if (spec.kind == "scaled-semigroup") {
        spec.s_gens = get_unsigned_list(j, "S", where);
        spec.t_gens = get_unsigned_list(j, "T", where);
        spec.e_gens = get_unsigned_list(j, "E", where);
        spec.d = get_unsigned(j, "d", where);
    } else if (spec.kind == "series-witness") {
        spec.p = get_unsigned(j, "p", where);
        spec.prec = get_unsigned(j, "N", where);
    } else {
        semantic_error(where, "unknown kind '" + spec.kind + "'");
    }
    return spec;
}

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports line/column in the message already
        fail(ErrorKind::invalid_parameter, std::string("syntax error: ") + e.what());
    }
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
    return instance_from_json(parse_text(text), "instance");
}

std::vector<InstanceSpec> parse_instances(const std::string& text) {
    json j = parse_text(text);
    std::vector<InstanceSpec> result;
    if (j.is_array()) {
        std::size_t index = 0;
        for (const auto& item : j)
            result.push_back(instance_from_json(item, "instance[" + std::to_string(index++) + "]"));
    } else {
        result.push_back(instance_from_json(j, "instance"));
    }
    return result;
}

json to_json(const InstanceSpec& spec) {
    json j;
    j["format"] = 1;
    j["kind"] = spec.kind;
    if (!spec.label.empty()) j["label"] = spec.label;
    if (!spec.suites.empty()) j["suites"] = spec.suites;
    if (spec.kind == "finite") {
        j["A"] = spec.a_tree;
        j["B"] = spec.b_tree;
        j["f"] = spec.f_spec;
        j["J"] = spec.j_gens;
        if (spec.corrupt) {
            j["corrupt"] = {{"ring", spec.corrupt->ring},
                            {"table", spec.corrupt->table},
                            {"row", spec.corrupt->row},
                            {"col", spec.corrupt->col},
                            {"value", spec.corrupt->value}};
        }
    } else if (spec.kind == "semigroup") {
        j["S"] = spec.s_gens;
        j["E"] = spec.e_gens;
    } else if (spec.kind == "scaled-semigroup") {
        j["S"] = spec.s_gens;
        j["T"] = spec.t_gens;
        j["E"] = spec.e_gens;
        j["d"] = spec.d;
    } else if (spec.kind == "series-witness") {
        j["p"] = spec.p;
        j["N"] = spec.prec;
    }
    return j;
}

std::string serialize(const InstanceSpec& spec) { return to_json(spec).dump(2); }

RingPtr RingBuilder::build(const json& tree) {
    std::string key = tree.dump();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    std::string op = tree["op"].get<std::string>();
    RingPtr result;
    if (op == "zmod") {
        result = build_zmod(tree["n"].get<unsigned>(), cap_);
    } else if (op == "poly_quot") {
        result = build_field_poly_quot(tree["p"].get<unsigned>(),
                                       tree["modulus"].get<std::vector<unsigned>>(), cap_);
    } else if (op == "product") {
        const auto& factors = tree["factors"];
        result = build(factors[0]);
        for (std::size_t i = 1; i < factors.size(); ++i)
            result = product(result, build(factors[i]), cap_).ring;
    } else if (op == "quotient") {
        RingPtr base = build(tree["ring"]);
        std::vector<Elem> gens;
        for (unsigned g : tree["ideal_gens"].get<std::vector<unsigned>>()) {
            if (g >= base->size)
                fail(ErrorKind::invalid_parameter,
                     "quotient: ideal generator out of range for " + base->label);
            gens.push_back(static_cast<Elem>(g));
        }
        result = quotient(base, ideal_generated(base, gens)).ring;
    } else if (op == "subring") {
        RingPtr base = build(tree["ring"]);
        std::vector<Elem> seeds;
        for (unsigned s : tree["seeds"].get<std::vector<unsigned>>()) {
            if (s >= base->size)
                fail(ErrorKind::invalid_parameter,
                     "subring: seed out of range for " + base->label);
            seeds.push_back(static_cast<Elem>(s));
        }
        result = subring_closure(base, seeds).ring;
    } else {
        fail(ErrorKind::invalid_parameter, "unknown ring constructor '" + op + "'");
    }
    cache_.emplace(std::move(key), result);
    return result;
}

RingHom compile_hom(const RingPtr& source, const RingPtr& target, const json& f_spec) {
    if (f_spec.contains("map")) {
        std::vector<Elem> map;
        for (unsigned v : f_spec["map"].get<std::vector<unsigned>>())
            map.push_back(static_cast<Elem>(v));
        return hom_from_map(source, target, std::move(map));
    }

    // generator images: propagate through the operation tables until the map
    // is total, reporting the first conflict as the witness
    std::vector<Elem> map(source->size, 0);
    std::vector<bool> have(source->size, false);
    auto assign = [&](Elem x, Elem v) {
        if (have[x] && map[x] != v)
            fail(ErrorKind::not_a_homomorphism,
                 "f does not extend to a homomorphism: witness element " +
                     std::to_string(x) + " of " + source->label);
        map[x] = v;
        have[x] = true;
    };
    assign(source->zero, target->zero);
    assign(source->one, target->one);
    for (const auto& pair : f_spec["images"]) {
        unsigned a = pair[0].get<unsigned>(), b = pair[1].get<unsigned>();
        if (a >= source->size || b >= target->size)
            fail(ErrorKind::invalid_parameter, "f.images entry out of range");
        assign(static_cast<Elem>(a), static_cast<Elem>(b));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (Elem a = 0; a < source->size; ++a) {
            if (!have[a]) continue;
            if (!have[source->neg(a)]) { assign(source->neg(a), target->neg(map[a])); grew = true; }
            for (Elem b = 0; b < source->size; ++b) {
                if (!have[b]) continue;
                Elem s = source->add(a, b);
                Elem v = target->add(map[a], map[b]);
                if (!have[s]) { assign(s, v); grew = true; }
                else if (map[s] != v)
                    fail(ErrorKind::not_a_homomorphism,
                         "f does not extend to a homomorphism: witness (" +
                             std::to_string(a) + "," + std::to_string(b) + ") under +");
                Elem m = source->mul(a, b);
                Elem w = target->mul(map[a], map[b]);
                if (!have[m]) { assign(m, w); grew = true; }
                else if (map[m] != w)
                    fail(ErrorKind::not_a_homomorphism,
                         "f does not extend to a homomorphism: witness (" +
                             std::to_string(a) + "," + std::to_string(b) + ") under *");
            }
        }
    }
    for (Elem a = 0; a < source->size; ++a)
        if (!have[a])
            fail(ErrorKind::invalid_parameter,
                 "f.images do not determine f on element " + std::to_string(a) +
                     " of " + source->label);
    return hom_from_map(source, target, std::move(map));
}

FiniteContext build_finite_context(const InstanceSpec& spec, RingBuilder& builder) {
    FiniteContext ctx;
    ctx.A = builder.build(spec.a_tree);
    ctx.B = builder.build(spec.b_tree);
    if (spec.corrupt) {
        RingPtr mutated = corrupt_table_for_selftest(
            spec.corrupt->ring == "A" ? ctx.A : ctx.B, spec.corrupt->table,
            spec.corrupt->row, spec.corrupt->col, spec.corrupt->value);
        (spec.corrupt->ring == "A" ? ctx.A : ctx.B) = mutated;
    }
    ctx.f = compile_hom(ctx.A, ctx.B, spec.f_spec);
    for (Elem g : spec.j_gens)
        if (g >= ctx.B->size)
            fail(ErrorKind::invalid_parameter, "J generator out of range for " + ctx.B->label);
    ctx.J = ideal_generated(ctx.B, spec.j_gens);
    ctx.D = amalgamate(ctx.A, ctx.B, ctx.f, ctx.J, builder.cap());
    return ctx;
}

}  // namespace amalgam
