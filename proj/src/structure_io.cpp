#include "gcodim/app.hpp"

#include "gcodim/error.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace gcodim::app {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

Elem parse_elem(const FiniteGroup& g, const json& j) {
    if (j.is_number_integer()) {
        long v = j.get<long>();
        if (v < 0 || v >= g.order())
            throw Error(Errc::BadParameter, "element index out of range: " + std::to_string(v));
        return g.relabeling()[static_cast<std::size_t>(v)];
    }
    if (j.is_string()) {
        auto e = g.find(j.get<std::string>());
        if (!e)
            throw Error(Errc::UnknownName, "unknown element: " + j.get<std::string>());
        return *e;
    }
    parse_fail("element must be an index or a label");
}

std::vector<Elem> parse_elems(const FiniteGroup& g, const json& j, const char* what) {
    if (!j.is_array())
        parse_fail(std::string(what) + " must be an array");
    std::vector<Elem> out;
    for (const auto& x : j)
        out.push_back(parse_elem(g, x));
    return out;
}

Rational parse_rational_json(const json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            parse_fail(e.what());
        }
    }
    parse_fail("cocycle entries must be integers or \"p/q\" strings");
}

json labels_of(const FiniteGroup& g, const std::vector<Elem>& xs) {
    json a = json::array();
    for (Elem x : xs)
        a.push_back(g.label(x));
    return a;
}

std::string default_id(const FiniteGroup& g, const std::vector<Elem>& v, const char* kind) {
    std::string s = g.name() + ":" + kind;
    if (!v.empty()) {
        s += ":(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + g.label(v[i]);
        s += ")";
    }
    return s;
}

} // namespace

FiniteGroup parse_group(const json& j) {
    if (j.is_string())
        return FiniteGroup::builtin(j.get<std::string>());
    if (!j.is_object())
        parse_fail("group must be a builtin name or an object");
    if (!j.contains("table") || !j["table"].is_array())
        parse_fail("group object needs a \"table\" array");
    std::vector<std::vector<int>> t;
    for (const auto& row : j["table"]) {
        if (!row.is_array())
            parse_fail("table rows must be arrays");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                parse_fail("table entries must be integers");
            r.push_back(x.get<int>());
        }
        t.push_back(std::move(r));
    }
    if (j.contains("order")) {
        if (!j["order"].is_number_integer())
            parse_fail("\"order\" must be an integer");
        if (j["order"].get<long>() != static_cast<long>(t.size()))
            throw Error(Errc::BadParameter, "\"order\" does not match the table size");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array())
            parse_fail("\"labels\" must be an array of strings");
        for (const auto& x : j["labels"]) {
            if (!x.is_string())
                parse_fail("\"labels\" must be an array of strings");
            labels.push_back(x.get<std::string>());
        }
    }
    int cap = FiniteGroup::default_order_cap;
    if (j.contains("order_cap") && j["order_cap"].is_number_integer())
        cap = j["order_cap"].get<int>();
    return FiniteGroup::from_cayley_table(t, labels, cap);
}

NamedStructure parse_structure(const json& j) {
    if (!j.is_object())
        parse_fail("structure must be a JSON object");
    if (!j.contains("group"))
        parse_fail("structure needs a \"group\"");
    const FiniteGroup g = parse_group(j["group"]);
    std::string kind;
    if (j.contains("kind")) {
        if (!j["kind"].is_string())
            parse_fail("\"kind\" must be a string");
        kind = j["kind"].get<std::string>();
    } else {
        kind = !j.contains("subgroup") ? "elementary" : (j.contains("vector") ? "gsimple" : "fine");
    }
    std::vector<Elem> vec;
    if (j.contains("vector"))
        vec = parse_elems(g, j["vector"], "\"vector\"");

    std::optional<ElementSet> h;
    if (j.contains("subgroup")) {
        const auto& sj = j["subgroup"];
        if (sj.is_string() && sj.get<std::string>() == "all")
            h = whole_group(g);
        else if (sj.is_string() && sj.get<std::string>() == "trivial")
            h = trivial_subgroup(g);
        else
            h = make_subgroup(g, parse_elems(g, sj, "\"subgroup\""));
    }
    std::optional<CocycleTable> mu;
    if (j.contains("cocycle") && !j["cocycle"].is_null()) {
        const auto& cj = j["cocycle"];
        if (!cj.is_array())
            parse_fail("\"cocycle\" must be an array of rows");
        CocycleTable t;
        for (const auto& row : cj) {
            if (!row.is_array())
                parse_fail("\"cocycle\" rows must be arrays");
            std::vector<Rational> r;
            for (const auto& x : row)
                r.push_back(parse_rational_json(x));
            t.push_back(std::move(r));
        }
        mu = std::move(t);
    }

    NamedStructure out{"", ElementaryGrading::analyze(g, {0})};
    if (kind == "elementary") {
        if (vec.empty())
            parse_fail("elementary structure needs a nonempty \"vector\"");
        out.s = ElementaryGrading::analyze(g, vec);
        out.id = default_id(g, vec, "elementary");
    } else if (kind == "fine") {
        out.s = FineGrading(g, h ? *h : whole_group(g), mu);
        out.id = default_id(g, {}, "fine");
    } else if (kind == "gsimple") {
        if (vec.empty())
            vec = {0};
        out.s = GSimpleStructure::make(g, h ? *h : trivial_subgroup(g), mu, vec);
        out.id = default_id(g, vec, "gsimple");
    } else {
        parse_fail("unknown structure kind: " + kind);
    }
    if (j.contains("id")) {
        if (!j["id"].is_string())
            parse_fail("\"id\" must be a string");
        out.id = j["id"].get<std::string>();
    }
    return out;
}

json read_json_source(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in)
            parse_fail("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
}

json analyze_json(const NamedStructure& ns) {
    json out;
    out["structure"] = ns.id;
    if (const auto* e = std::get_if<ElementaryGrading>(&ns.s)) {
        const auto& g = e->group();
        out["kind"] = "elementary";
        out["group"] = g.name();
        out["vector"] = labels_of(g, e->vector());
        out["B"] = labels_of(g, e->B().members());
        out["multiplicities"] = e->mults();
        out["H_B"] = labels_of(g, e->H_B().members());
        out["H_g"] = labels_of(g, e->H_g().members());
        out["m"] = e->m();
        out["dim_A"] = e->m() * e->m();
        out["dim_Ae"] = e->sum_squares();
        json comp = json::object();
        for (int x = 0; x < g.order(); ++x)
            comp[g.label(x)] = component_dim(*e, x);
        out["component_dims"] = comp;
        const auto f = elementary_asymptotics(*e, Target::CSequence, AlphaMode::Derived);
        out["b"] = to_string(f.b);
        out["d"] = f.d.get_si();
    } else if (const auto* f = std::get_if<FineGrading>(&ns.s)) {
        const auto& g = f->group();
        const FiniteGroup h = f->subgroup().as_group();
        const auto hp = commutator_subgroup(h);
        std::vector<Elem> hp_g;
        for (Elem x : hp.members())
            hp_g.push_back(f->subgroup().members()[x]);
        out["kind"] = "fine";
        out["group"] = g.name();
        out["H"] = labels_of(g, f->subgroup().members());
        out["Hprime"] = labels_of(g, hp_g);
        out["Hprime_order"] = hp.size();
        out["twisted"] = f->cocycle().has_value();
        out["dim_A"] = f->subgroup().size();
        out["dim_Ae"] = 1;
        const auto a = fine_asymptotics(h);
        out["b"] = to_string(a.b);
        out["d"] = a.d.get_si();
    } else {
        const auto& s = std::get<GSimpleStructure>(ns.s);
        const auto& g = s.group();
        out["kind"] = "gsimple";
        out["group"] = g.name();
        out["H"] = labels_of(g, s.fine().subgroup().members());
        out["vector_input"] = labels_of(g, s.raw_vector());
        out["vector"] = labels_of(g, s.vector());
        out["multiplicities"] = s.mults();
        out["dim_A"] = s.dim_A();
        out["dim_Ae"] = s.dim_Ae();
        const auto a = gsimple_shape(s);
        out["b"] = to_string(a.b);
        out["d"] = a.d.get_si();
    }
    return out;
}

json group_json(const FiniteGroup& g, int max_len) {
    json out;
    out["name"] = g.name();
    out["order"] = g.order();
    out["labels"] = g.labels();
    out["table"] = g.table();
    out["abelian"] = g.is_abelian();
    const auto hp = commutator_subgroup(g);
    out["commutator_subgroup"] = labels_of(g, hp.members());
    try {
        const auto t = find_commutator_tuple(g, max_len);
        out["commutator_tuple"] = {{"n0", t.n0}, {"h0", labels_of(g, t.h0)}};
    } catch (const Error& e) {
        if (e.code() != Errc::NotFoundWithinBound)
            throw;
        out["commutator_tuple"] = nullptr;
    }
    return out;
}

json radical_json(const RadicalConstant& c) {
    return json{{"q", to_string(c.q())}, {"r", c.r().get_str()}, {"pi_pow", c.pi_power()}};
}

std::pair<int, int> parse_range(const std::string& s) {
    auto p = s.find("..");
    try {
        if (p == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, p)), std::stoi(s.substr(p + 2))};
    } catch (const std::exception&) {
        parse_fail("bad range: " + s);
    }
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                parse_fail("bad integer: " + tok);
        } catch (const std::logic_error&) {
            parse_fail("bad integer: " + tok);
        }
    }
    return out;
}

} // namespace gcodim::app
