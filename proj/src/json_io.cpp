#include "skewcat/json_io.hpp"

#include <fstream>

namespace skewcat {

namespace {

int parse_degree(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw ParseError("bad degree key '" + s + "'");
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad degree key '" + s + "'");
    }
}

const Json& need(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

std::string need_string(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a string");
    return v.get<std::string>();
}

std::pair<int, int> split_pair_key(const DgCategory& c, const std::string& key) {
    auto bar = key.find('|');
    if (bar == std::string::npos) throw ParseError("hom key '" + key + "' lacks '|'");
    auto x = c.object_index(key.substr(0, bar));
    auto y = c.object_index(key.substr(bar + 1));
    if (!x || !y) throw ParseError("hom key '" + key + "' names unknown objects");
    return {*x, *y};
}

std::pair<int, std::size_t> need_basis(const DgCategory& c, int x, int y,
                                       const std::string& label, const std::string& ctx) {
    auto hit = c.find_basis(x, y, label);
    if (!hit) throw ParseError(ctx + ": unknown basis label '" + label + "'");
    return *hit;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON in '" + path + "'");
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

std::string json_kind(const Json& j) {
    if (!j.is_object()) throw ParseError("top level must be an object");
    const Json& schema = need(j, "schema");
    if (!schema.is_number_integer() || schema.get<int>() != 1)
        throw ParseError("unsupported schema version");
    return need_string(j, "kind");
}

Json to_json(const FieldSpec& f) {
    return Json{{"kind", f.kind == FieldSpec::Kind::rationals ? "rationals" : "prime-field"},
                {"characteristic", f.characteristic}};
}

FieldSpec field_from_json(const Json& j) {
    std::string kind = need_string(j, "kind");
    if (kind == "rationals") return FieldSpec::rationals();
    if (kind == "prime-field") {
        const Json& c = need(j, "characteristic");
        if (!c.is_number_unsigned()) throw ParseError("characteristic must be a nonnegative integer");
        try {
            return FieldSpec::prime(c.get<std::uint64_t>());
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown field kind '" + kind + "'");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const FieldSpec& f, std::size_t rows, std::size_t cols, const Json& j) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix row count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != cols) throw ParseError("matrix column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_string()) throw ParseError("matrix entries must be strings");
            m.at(r, c) = Scalar::parse(f, row[c].get<std::string>());
        }
    }
    return m;
}

namespace {

Json graded_map_to_json(const GradedMap& g) {
    Json blocks = Json::object();
    for (const auto& [d, blk] : g.blocks()) blocks[std::to_string(d)] = matrix_to_json(blk);
    return blocks;
}

}  // namespace

Json graded_dims_to_json(const GradedDims& d) {
    Json out = Json::object();
    for (const auto& [deg, n] : d) out[std::to_string(deg)] = n;
    return out;
}

Json complex_to_json(const ChainComplex& c) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "complex";
    j["field"] = to_json(c.field);
    j["dims"] = graded_dims_to_json(c.dims);
    j["differential"] = graded_map_to_json(c.differential);
    return j;
}

ChainComplex complex_from_json(const Json& j) {
    ChainComplex c;
    c.field = field_from_json(need(j, "field"));
    for (const auto& [key, val] : need(j, "dims").items()) {
        if (!val.is_number_unsigned() || val.get<std::size_t>() == 0)
            throw ParseError("dims values must be positive integers");
        c.dims[parse_degree(key)] = val.get<std::size_t>();
    }
    for (const auto& [key, val] : need(j, "differential").items()) {
        int d = parse_degree(key);
        c.differential.set_block(
            d, matrix_from_json(c.field, dim_at(c.dims, d - 1), dim_at(c.dims, d), val));
    }
    return c;
}

Json dgcat_to_json(const DgCategory& c) {
    for (const auto& name : c.objects())
        if (name.find('|') != std::string::npos)
            throw Error("object name '" + name + "' cannot contain '|'");
    Json j;
    j["schema"] = 1;
    j["kind"] = "dgcat";
    j["field"] = to_json(c.field());
    j["objects"] = c.objects();

    Json homs = Json::object();
    Json diffs = Json::array();
    for (const auto& [pair, h] : c.homs()) {
        auto [x, y] = pair;
        std::string key = c.object_name(x) + "|" + c.object_name(y);
        Json per_degree = Json::object();
        for (const auto& [d, names] : h.basis) per_degree[std::to_string(d)] = names;
        homs[key] = std::move(per_degree);
        for (const auto& [d, blk] : h.complex.differential.blocks())
            for (std::size_t col = 0; col < blk.cols(); ++col)
                for (std::size_t row = 0; row < blk.rows(); ++row)
                    if (!blk.at(row, col).is_zero())
                        diffs.push_back(Json{{"pair", key},
                                             {"input", h.basis.at(d).at(col)},
                                             {"output", h.basis.at(d - 1).at(row)},
                                             {"coeff", blk.at(row, col).str()}});
    }
    j["homs"] = std::move(homs);
    j["differentials"] = std::move(diffs);

    Json comps = Json::array();
    for (const auto& [key, blk] : c.comp_blocks()) {
        auto [x, y, z, p, q] = key;
        std::string triple =
            c.object_name(x) + "|" + c.object_name(y) + "|" + c.object_name(z);
        for (std::size_t i = 0; i < blk.left_dim(); ++i)
            for (std::size_t jj = 0; jj < blk.right_dim(); ++jj)
                for (std::size_t k = 0; k < blk.out_dim(); ++k)
                    if (!blk.at(i, jj, k).is_zero())
                        comps.push_back(Json{{"triple", triple},
                                             {"left", c.basis_name(x, y, p, i)},
                                             {"right", c.basis_name(y, z, q, jj)},
                                             {"out", c.basis_name(x, z, p + q, k)},
                                             {"coeff", blk.at(i, jj, k).str()}});
    }
    j["compositions"] = std::move(comps);

    Json units = Json::object();
    for (std::size_t x = 0; x < c.object_count(); ++x) {
        const Element& u = c.unit(static_cast<int>(x));
        Json coeffs = Json::object();
        for (const auto& [d, v] : u.comps)
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero())
                    coeffs[c.basis_name(static_cast<int>(x), static_cast<int>(x), d, i)] =
                        v[i].str();
        units[c.object_name(static_cast<int>(x))] = std::move(coeffs);
    }
    j["units"] = std::move(units);
    return j;
}

DgCategory dgcat_from_json(const Json& j) {
    FieldSpec f = field_from_json(need(j, "field"));
    DgCategory c(f);
    const Json& objs = need(j, "objects");
    if (!objs.is_array()) throw ParseError("objects must be an array");
    for (const auto& o : objs) {
        if (!o.is_string()) throw ParseError("object names must be strings");
        std::string name = o.get<std::string>();
        if (name.find('|') != std::string::npos)
            throw ParseError("object name '" + name + "' cannot contain '|'");
        if (c.object_index(name)) throw ParseError("duplicate object '" + name + "'");
        c.add_object(name);
    }

    for (const auto& [key, val] : need(j, "homs").items()) {
        auto [x, y] = split_pair_key(c, key);
        HomData h;
        h.complex.field = f;
        std::set<std::string> seen;
        for (const auto& [deg_key, names] : val.items()) {
            int d = parse_degree(deg_key);
            if (!names.is_array() || names.empty())
                throw ParseError("hom " + key + " degree " + deg_key +
                                 " must be a nonempty name array");
            for (const auto& nm : names) {
                if (!nm.is_string()) throw ParseError("basis names must be strings");
                if (!seen.insert(nm.get<std::string>()).second)
                    throw ParseError("duplicate basis label '" + nm.get<std::string>() +
                                     "' in hom " + key);
                h.basis[d].push_back(nm.get<std::string>());
            }
            h.complex.dims[d] = h.basis[d].size();
        }
        c.set_hom(x, y, std::move(h));
    }

    // differentials: sparse records into per-pair blocks
    std::map<std::pair<int, int>, GradedMap> diff_acc;
    for (const auto& rec : need(j, "differentials")) {
        std::string key = need_string(rec, "pair");
        auto [x, y] = split_pair_key(c, key);
        auto [d_in, i_in] = need_basis(c, x, y, need_string(rec, "input"), "differential");
        auto [d_out, i_out] = need_basis(c, x, y, need_string(rec, "output"), "differential");
        if (d_out != d_in - 1)
            throw ParseError("differential record in " + key + " does not lower degree by 1");
        auto& gm = diff_acc.try_emplace(std::make_pair(x, y), GradedMap(-1)).first->second;
        const Matrix* existing = gm.block(d_in);
        Matrix blk = existing ? *existing
                              : Matrix(f, c.hom_dim_at(x, y, d_out), c.hom_dim_at(x, y, d_in));
        if (!blk.at(i_out, i_in).is_zero())
            throw ParseError("duplicate differential record in " + key);
        blk.at(i_out, i_in) = Scalar::parse(f, need_string(rec, "coeff"));
        gm.set_block(d_in, std::move(blk));
    }
    for (auto& [pair, gm] : diff_acc) {
        HomData h = *c.hom(pair.first, pair.second);
        h.complex.differential = std::move(gm);
        c.set_hom(pair.first, pair.second, std::move(h));
    }

    for (const auto& rec : need(j, "compositions")) {
        std::string triple = need_string(rec, "triple");
        auto bar1 = triple.find('|');
        auto bar2 = triple.find('|', bar1 == std::string::npos ? 0 : bar1 + 1);
        if (bar1 == std::string::npos || bar2 == std::string::npos)
            throw ParseError("composition triple '" + triple + "' needs two '|'");
        auto x = c.object_index(triple.substr(0, bar1));
        auto y = c.object_index(triple.substr(bar1 + 1, bar2 - bar1 - 1));
        auto z = c.object_index(triple.substr(bar2 + 1));
        if (!x || !y || !z)
            throw ParseError("composition triple '" + triple + "' names unknown objects");
        auto [p, i] = need_basis(c, *x, *y, need_string(rec, "left"), "composition");
        auto [q, jj] = need_basis(c, *y, *z, need_string(rec, "right"), "composition");
        auto [pq, k] = need_basis(c, *x, *z, need_string(rec, "out"), "composition");
        if (pq != p + q)
            throw ParseError("composition record in " + triple + " violates degree additivity");
        const CompBlock* existing = c.comp_block(*x, *y, *z, p, q);
        if (existing && !existing->at(i, jj, k).is_zero())
            throw ParseError("duplicate composition record in " + triple);
        c.add_comp_entry(*x, *y, *z, p, i, q, jj, k, Scalar::parse(f, need_string(rec, "coeff")));
    }

    for (const auto& [obj_name, coeffs] : need(j, "units").items()) {
        auto x = c.object_index(obj_name);
        if (!x) throw ParseError("unit for unknown object '" + obj_name + "'");
        Element u;
        for (const auto& [label, coeff] : coeffs.items()) {
            auto [d, i] = need_basis(c, *x, *x, label, "unit");
            std::size_t dim = c.hom_dim_at(*x, *x, d);
            auto it = u.comps.find(d);
            if (it == u.comps.end())
                it = u.comps.emplace(d, std::vector<Scalar>(dim, Scalar::zero(f))).first;
            if (!coeff.is_string()) throw ParseError("unit coefficients must be strings");
            it->second[i] = Scalar::parse(f, coeff.get<std::string>());
        }
        c.set_unit(*x, std::move(u));
    }
    return c;
}

Json monoid_to_json(const FiniteMonoid& m) {
    Json j;
    j["elements"] = m.elements();
    j["identity"] = m.element_name(m.identity());
    Json table = Json::array();
    for (std::size_t g = 0; g < m.size(); ++g) {
        Json row = Json::array();
        for (std::size_t h = 0; h < m.size(); ++h)
            row.push_back(m.element_name(m.mul(static_cast<int>(g), static_cast<int>(h))));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    if (m.has_inverses()) {
        Json inv = Json::object();
        for (std::size_t g = 0; g < m.size(); ++g)
            inv[m.element_name(static_cast<int>(g))] =
                m.element_name(m.inverse(static_cast<int>(g)));
        j["inverses"] = std::move(inv);
    }
    return j;
}

FiniteMonoid monoid_from_json(const Json& j) {
    const Json& els = need(j, "elements");
    if (!els.is_array() || els.empty()) throw ParseError("monoid needs a nonempty element list");
    std::vector<std::string> names;
    for (const auto& e : els) {
        if (!e.is_string()) throw ParseError("monoid element names must be strings");
        names.push_back(e.get<std::string>());
    }
    auto index_of = [&](const std::string& n) -> int {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        throw ParseError("unknown monoid element '" + n + "'");
    };
    const Json& tj = need(j, "table");
    if (!tj.is_array() || tj.size() != names.size()) throw ParseError("monoid table row count");
    std::vector<std::vector<int>> table;
    for (const auto& rj : tj) {
        if (!rj.is_array() || rj.size() != names.size()) throw ParseError("monoid table row size");
        std::vector<int> row;
        for (const auto& cell : rj) {
            if (!cell.is_string()) throw ParseError("monoid table entries must be element names");
            row.push_back(index_of(cell.get<std::string>()));
        }
        table.push_back(std::move(row));
    }
    int identity = index_of(need_string(j, "identity"));
    std::optional<std::vector<int>> inverses;
    if (j.contains("inverses")) {
        std::vector<int> inv(names.size(), -1);
        for (const auto& [g, gi] : j["inverses"].items()) {
            if (!gi.is_string()) throw ParseError("inverse entries must be element names");
            inv[static_cast<std::size_t>(index_of(g))] = index_of(gi.get<std::string>());
        }
        for (int v : inv)
            if (v < 0) throw ParseError("inverses must cover every element");
        inverses = std::move(inv);
    }
    return FiniteMonoid(std::move(names), std::move(table), identity, std::move(inverses));
}

Json functor_to_json(const DgFunctor& f, const DgCategory& src, const DgCategory& dst) {
    Json j;
    Json objs = Json::object();
    for (std::size_t x = 0; x < src.object_count(); ++x)
        objs[src.object_name(static_cast<int>(x))] =
            dst.object_name(f.map_object(static_cast<int>(x)));
    j["objects"] = std::move(objs);
    Json homs = Json::object();
    for (const auto& [pair, m] : f.hom_maps) {
        std::string key = src.object_name(pair.first) + "|" + src.object_name(pair.second);
        homs[key] = graded_map_to_json(m);
    }
    j["homs"] = std::move(homs);
    return j;
}

DgFunctor functor_from_json(const Json& j, const DgCategory& src, const DgCategory& dst) {
    DgFunctor f;
    f.object_map.assign(src.object_count(), -1);
    for (const auto& [from, to] : need(j, "objects").items()) {
        auto x = src.object_index(from);
        if (!x) throw ParseError("functor maps unknown object '" + from + "'");
        if (!to.is_string()) throw ParseError("functor object images must be strings");
        auto y = dst.object_index(to.get<std::string>());
        if (!y) throw ParseError("functor object image '" + to.get<std::string>() + "' unknown");
        f.object_map[static_cast<std::size_t>(*x)] = *y;
    }
    for (int v : f.object_map)
        if (v < 0) throw ParseError("functor object map must cover every object");
    for (const auto& [key, blocks] : need(j, "homs").items()) {
        auto [x, y] = split_pair_key(src, key);
        GradedMap m(0);
        int fx = f.map_object(x), fy = f.map_object(y);
        for (const auto& [deg_key, blk] : blocks.items()) {
            int d = parse_degree(deg_key);
            m.set_block(d, matrix_from_json(src.field(), dst.hom_dim_at(fx, fy, d),
                                            src.hom_dim_at(x, y, d), blk));
        }
        f.set_hom_map(x, y, std::move(m));
    }
    return f;
}

Json action_to_json(const StrictAction& rho) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "action";
    j["monoid"] = monoid_to_json(rho.monoid);
    j["category"] = dgcat_to_json(rho.category);
    Json fs = Json::object();
    for (std::size_t g = 0; g < rho.monoid.size(); ++g)
        fs[rho.monoid.element_name(static_cast<int>(g))] =
            functor_to_json(rho.functor(static_cast<int>(g)), rho.category, rho.category);
    j["functors"] = std::move(fs);
    return j;
}

StrictAction action_from_json(const Json& j) {
    FiniteMonoid mon = monoid_from_json(need(j, "monoid"));
    DgCategory cat = dgcat_from_json(need(j, "category"));
    const Json& fs = need(j, "functors");
    std::vector<DgFunctor> functors;
    for (std::size_t g = 0; g < mon.size(); ++g) {
        std::string name = mon.element_name(static_cast<int>(g));
        auto it = fs.find(name);
        if (it == fs.end()) throw ParseError("missing functor for element '" + name + "'");
        functors.push_back(functor_from_json(*it, cat, cat));
    }
    return StrictAction{std::move(mon), std::move(cat), std::move(functors)};
}

Json module_to_json(const RightModule& m, bool include_algebra) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "module";
    j["dim"] = m.dim();
    if (include_algebra) j["algebra"] = dgcat_to_json(m.algebra().as_category());
    Json act = Json::object();
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
        act[m.algebra().basis()[i]] = matrix_to_json(m.action(i));
    j["action"] = std::move(act);
    return j;
}

RightModule module_from_json(const Json& j, const std::optional<Algebra>& context) {
    std::optional<Algebra> alg = context;
    if (j.contains("algebra")) {
        auto parsed = Algebra::from_category(dgcat_from_json(j["algebra"]));
        if (!parsed) throw ParseError("module algebra is not a one-object degree-0 algebra");
        alg = std::move(parsed);
    }
    if (!alg) throw ParseError("module file has no algebra and no context supplies one");
    const Json& dim_j = need(j, "dim");
    if (!dim_j.is_number_unsigned()) throw ParseError("module dim must be a nonnegative integer");
    RightModule m(*alg, dim_j.get<std::size_t>());
    const Json& act = need(j, "action");
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        auto it = act.find(alg->basis()[i]);
        if (it == act.end())
            throw ParseError("module action missing basis element '" + alg->basis()[i] + "'");
        m.set_action(i, matrix_from_json(alg->field(), m.dim(), m.dim(), *it));
    }
    return m;
}

Json equivariant_to_json(const EquivariantModule& e, const FiniteMonoid& mon,
                         bool include_algebra, const StrictAction* embed_action) {
    Json j;
    j["schema"] = 1;
    j["kind"] = "equivariant";
    Json mod = module_to_json(e.base(), include_algebra);
    mod.erase("schema");
    mod.erase("kind");
    j["module"] = std::move(mod);
    Json u = Json::object();
    for (std::size_t g = 0; g < e.group_size(); ++g)
        u[mon.element_name(static_cast<int>(g))] = matrix_to_json(e.u(static_cast<int>(g)));
    j["u"] = std::move(u);
    if (embed_action != nullptr) {
        Json act = action_to_json(*embed_action);
        act.erase("schema");
        act.erase("kind");
        j["action"] = std::move(act);
    }
    return j;
}

std::optional<StrictAction> embedded_action(const Json& j) {
    if (!j.contains("action")) return std::nullopt;
    return action_from_json(j["action"]);
}

EquivariantModule equivariant_from_json(const Json& j, const StrictAction& rho) {
    auto alg = Algebra::from_category(rho.category);
    if (!alg) throw ParseError("equivariant context action does not target an algebra");
    RightModule base = module_from_json(need(j, "module"), alg);
    const Json& u_j = need(j, "u");
    std::vector<Matrix> u;
    for (std::size_t g = 0; g < rho.monoid.size(); ++g) {
        std::string name = rho.monoid.element_name(static_cast<int>(g));
        auto it = u_j.find(name);
        if (it == u_j.end()) throw ParseError("missing u-matrix for element '" + name + "'");
        u.push_back(matrix_from_json(alg->field(), base.dim(), base.dim(), *it));
    }
    return EquivariantModule(std::move(base), std::move(u));
}

}  // namespace skewcat
