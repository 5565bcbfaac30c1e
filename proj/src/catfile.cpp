#include "mcdg/catfile.hpp"

#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

namespace mcdg {

using json = nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        require(allowed.count(it.key()) > 0,
                "parse: unknown key \"" + it.key() + "\" in " + where);
}

const json& field_of(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    require(it != obj.end(), "parse: missing key \"" + key + "\" in " + where);
    return *it;
}

int int_of(const json& v, const std::string& where) {
    require(v.is_number_integer(), "parse: expected an integer in " + where);
    return v.get<int>();
}

std::string str_of(const json& v, const std::string& where) {
    require(v.is_string(), "parse: expected a string in " + where);
    return v.get<std::string>();
}

/// Scalars in documents must be written canonically, so that emission
/// reproduces the parsed document up to whitespace.
Scalar scalar_of(const Field& k, const json& v, const std::string& where) {
    std::string s = str_of(v, where);
    Scalar x = k.parse(s);
    require(k.to_string(x) == s, "parse: non-canonical scalar \"" + s + "\" in " + where);
    return x;
}

} // namespace

Field parse_field_name(const std::string& name) {
    if (name == "Q") return Field::rationals();
    require(name.size() > 1 && name[0] == 'F', "parse: unknown field \"" + name + "\"");
    for (std::size_t i = 1; i < name.size(); ++i)
        require(std::isdigit(static_cast<unsigned char>(name[i])),
                "parse: unknown field \"" + name + "\"");
    return Field::prime(std::stoll(name.substr(1)));
}

DGCategory parse_category(const std::string& text) {
    require(!text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos,
            "parse: empty document");
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("parse: ") + e.what());
    }
    require(doc.is_object(), "parse: top level must be an object");
    reject_unknown_keys(
        doc, {"format", "ring", "bound", "objects", "homs", "diffs", "comps", "identities"},
        "the document");
    require(str_of(field_of(doc, "format", "the document"), "format") == "dg-category",
            "parse: format must be \"dg-category\"");

    const json& ring = field_of(doc, "ring", "the document");
    require(ring.is_object(), "parse: ring must be an object");
    reject_unknown_keys(ring, {"field"}, "ring");
    Field k = parse_field_name(str_of(field_of(ring, "field", "ring"), "ring.field"));

    DGCategory P;
    P.ring = Ring::field(k);
    P.bound = int_of(field_of(doc, "bound", "the document"), "bound");
    require(P.bound >= 0, "parse: bound must be non-negative");

    const json& objs = field_of(doc, "objects", "the document");
    require(objs.is_array() && !objs.empty(), "parse: objects must be a non-empty array");
    for (const json& o : objs) {
        std::string label = str_of(o, "objects");
        require(!label.empty(), "parse: empty object label");
        require(P.object_index.count(label) == 0,
                "parse: duplicate object label \"" + label + "\"");
        P.object_index[label] = static_cast<int>(P.objects.size());
        P.objects.push_back(label);
    }
    auto obj_of = [&](const json& v, const std::string& where) {
        std::string label = str_of(v, where);
        auto it = P.object_index.find(label);
        require(it != P.object_index.end(),
                "parse: unknown object \"" + label + "\" in " + where);
        return it->second;
    };

    const json& homs = field_of(doc, "homs", "the document");
    require(homs.is_array(), "parse: homs must be an array");
    std::pair<int, int> prev_pair{-1, -1};
    for (const json& h : homs) {
        require(h.is_object(), "parse: each hom block must be an object");
        reject_unknown_keys(h, {"src", "dst", "degrees"}, "a hom block");
        int a = obj_of(field_of(h, "src", "hom block"), "hom src");
        int b = obj_of(field_of(h, "dst", "hom block"), "hom dst");
        std::pair<int, int> pr{a, b};
        require(prev_pair < pr, "parse: hom blocks must be in object order without duplicates");
        prev_pair = pr;
        const json& degs = field_of(h, "degrees", "hom block");
        require(degs.is_array() && !degs.empty(), "parse: degrees must be a non-empty array");
        int prev_deg = INT32_MIN;
        for (const json& d : degs) {
            require(d.is_array() && d.size() == 2, "parse: each degree entry is [degree, dim]");
            int deg = int_of(d[0], "degree entry");
            int dim = int_of(d[1], "degree entry");
            require(deg > prev_deg, "parse: degrees must be strictly ascending");
            prev_deg = deg;
            require(dim > 0, "parse: hom dimension must be positive");
            P.homs[{a, b}][deg] = dim;
        }
    }

    const json& diffs = field_of(doc, "diffs", "the document");
    require(diffs.is_array(), "parse: diffs must be an array");
    std::tuple<int, int, int> prev_diff{-1, -1, INT32_MIN};
    for (const json& d : diffs) {
        require(d.is_object(), "parse: each diff must be an object");
        reject_unknown_keys(d, {"src", "dst", "degree", "matrix"}, "a diff block");
        int a = obj_of(field_of(d, "src", "diff block"), "diff src");
        int b = obj_of(field_of(d, "dst", "diff block"), "diff dst");
        int deg = int_of(field_of(d, "degree", "diff block"), "diff degree");
        std::tuple<int, int, int> key{a, b, deg};
        require(prev_diff < key, "parse: diff blocks must be sorted without duplicates");
        prev_diff = key;
        int dsrc = P.dim(a, b, deg);
        int ddst = P.dim(a, b, deg + 1);
        require(dsrc > 0 && ddst > 0,
                "parse: diff declared between absent hom degrees (" + P.objects[a] + " -> " +
                    P.objects[b] + ", degree " + std::to_string(deg) + ")");
        const json& m = field_of(d, "matrix", "diff block");
        require(m.is_array() && static_cast<int>(m.size()) == ddst,
                "parse: diff matrix must have dim(degree+1) rows");
        RMat M(static_cast<std::size_t>(ddst), static_cast<std::size_t>(dsrc), 1);
        for (int r = 0; r < ddst; ++r) {
            const json& row = m[static_cast<std::size_t>(r)];
            require(row.is_array() && static_cast<int>(row.size()) == dsrc,
                    "parse: diff matrix row length mismatch");
            for (int c = 0; c < dsrc; ++c)
                M.entry(static_cast<std::size_t>(r), static_cast<std::size_t>(c))[0] =
                    scalar_of(k, row[static_cast<std::size_t>(c)], "a diff matrix entry");
        }
        P.diffs[key] = std::move(M);
    }

    const json& comps = field_of(doc, "comps", "the document");
    require(comps.is_array(), "parse: comps must be an array");
    CompKey prev_comp{-1, -1, -1, INT32_MIN, INT32_MIN};
    for (const json& c : comps) {
        require(c.is_object(), "parse: each composition block must be an object");
        reject_unknown_keys(c, {"src", "mid", "dst", "i", "j", "entries"},
                            "a composition block");
        int a = obj_of(field_of(c, "src", "comp block"), "comp src");
        int b = obj_of(field_of(c, "mid", "comp block"), "comp mid");
        int cc = obj_of(field_of(c, "dst", "comp block"), "comp dst");
        int i = int_of(field_of(c, "i", "comp block"), "comp i");
        int j = int_of(field_of(c, "j", "comp block"), "comp j");
        CompKey key{a, b, cc, i, j};
        require(prev_comp < key, "parse: composition blocks must be sorted without duplicates");
        prev_comp = key;
        int di = P.dim(a, b, i);
        int dj = P.dim(b, cc, j);
        int dout = P.dim(a, cc, i + j);
        require(di > 0 && dj > 0 && dout > 0,
                "parse: composition block over absent hom degrees (i=" + std::to_string(i) +
                    ", j=" + std::to_string(j) + ")");
        auto blk = std::make_shared<CompBlock>(static_cast<std::size_t>(dj),
                                               static_cast<std::size_t>(di),
                                               static_cast<std::size_t>(dout), 1);
        const json& entries = field_of(c, "entries", "comp block");
        require(entries.is_array() && !entries.empty(),
                "parse: composition entries must be a non-empty array");
        std::tuple<int, int, int> prev_e{-1, -1, -1};
        for (const json& e : entries) {
            require(e.is_array() && e.size() == 4,
                    "parse: each composition entry is [bj, ai, out, coeff]");
            int bj = int_of(e[0], "comp entry");
            int ai = int_of(e[1], "comp entry");
            int o = int_of(e[2], "comp entry");
            require(bj >= 0 && bj < dj && ai >= 0 && ai < di && o >= 0 && o < dout,
                    "parse: composition entry index out of range");
            std::tuple<int, int, int> ek{bj, ai, o};
            require(prev_e < ek, "parse: composition entries must be sorted without duplicates");
            prev_e = ek;
            Scalar cv = scalar_of(k, e[3], "a composition coefficient");
            require(!cv.is_zero(), "parse: composition entry with zero coefficient");
            blk->entry(static_cast<std::size_t>(bj), static_cast<std::size_t>(ai),
                       static_cast<std::size_t>(o))[0] = cv;
        }
        P.comps[key] = std::move(blk);
    }

    const json& ids = field_of(doc, "identities", "the document");
    require(ids.is_array() && ids.size() == P.objects.size(),
            "parse: identities must list exactly one entry per object");
    P.ids.resize(P.objects.size());
    for (std::size_t t = 0; t < ids.size(); ++t) {
        const json& e = ids[t];
        require(e.is_object(), "parse: each identity must be an object");
        reject_unknown_keys(e, {"object", "coeffs"}, "an identity block");
        int obj = obj_of(field_of(e, "object", "identity block"), "identity object");
        require(obj == static_cast<int>(t), "parse: identities must be in object order");
        const json& co = field_of(e, "coeffs", "identity block");
        int d0 = P.dim(obj, obj, 0);
        require(co.is_array() && static_cast<int>(co.size()) == d0,
                "parse: identity coefficient length must equal dim P^0(" + P.objects[t] + ", " +
                    P.objects[t] + ")");
        std::vector<Scalar> v(static_cast<std::size_t>(d0));
        for (int c = 0; c < d0; ++c)
            v[static_cast<std::size_t>(c)] =
                scalar_of(k, co[static_cast<std::size_t>(c)], "an identity coefficient");
        P.ids[t] = std::move(v);
    }
    return P;
}

std::string emit_category(const DGCategory& P) {
    require(P.ring.width() == 1, "emit: only field categories are serialized");
    const Field& k = P.ring.base();
    json doc;
    doc["format"] = "dg-category";
    doc["ring"] = json{{"field", k.name()}};
    doc["bound"] = P.bound;
    doc["objects"] = P.objects;

    json homs = json::array();
    for (const auto& [pr, degs] : P.homs) {
        if (degs.empty()) continue;
        json block;
        block["src"] = P.objects[static_cast<std::size_t>(pr.first)];
        block["dst"] = P.objects[static_cast<std::size_t>(pr.second)];
        json dl = json::array();
        for (const auto& [deg, dim] : degs)
            if (dim > 0) dl.push_back(json::array({deg, dim}));
        if (dl.empty()) continue;
        block["degrees"] = std::move(dl);
        homs.push_back(std::move(block));
    }
    doc["homs"] = std::move(homs);

    json diffs = json::array();
    for (const auto& [key, M] : P.diffs) {
        json block;
        block["src"] = P.objects[static_cast<std::size_t>(std::get<0>(key))];
        block["dst"] = P.objects[static_cast<std::size_t>(std::get<1>(key))];
        block["degree"] = std::get<2>(key);
        json rows = json::array();
        for (std::size_t r = 0; r < M.rows; ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < M.cols; ++c) row.push_back(k.to_string(M.entry(r, c)[0]));
            rows.push_back(std::move(row));
        }
        block["matrix"] = std::move(rows);
        diffs.push_back(std::move(block));
    }
    doc["diffs"] = std::move(diffs);

    json comps = json::array();
    for (const auto& [key, blk] : P.comps) {
        json block;
        block["src"] = P.objects[static_cast<std::size_t>(std::get<0>(key))];
        block["mid"] = P.objects[static_cast<std::size_t>(std::get<1>(key))];
        block["dst"] = P.objects[static_cast<std::size_t>(std::get<2>(key))];
        block["i"] = std::get<3>(key);
        block["j"] = std::get<4>(key);
        json entries = json::array();
        for (std::size_t bj = 0; bj < blk->dj; ++bj)
            for (std::size_t ai = 0; ai < blk->di; ++ai)
                for (std::size_t o = 0; o < blk->dout; ++o) {
                    const Scalar& v = blk->entry(bj, ai, o)[0];
                    if (!v.is_zero())
                        entries.push_back(json::array({static_cast<int>(bj),
                                                       static_cast<int>(ai),
                                                       static_cast<int>(o), k.to_string(v)}));
                }
        if (entries.empty()) continue;
        block["entries"] = std::move(entries);
        comps.push_back(std::move(block));
    }
    doc["comps"] = std::move(comps);

    json ids = json::array();
    for (std::size_t t = 0; t < P.objects.size(); ++t) {
        json block;
        block["object"] = P.objects[t];
        json co = json::array();
        for (const Scalar& v : P.ids[t]) co.push_back(k.to_string(v));
        block["coeffs"] = std::move(co);
        ids.push_back(std::move(block));
    }
    doc["identities"] = std::move(ids);
    return doc.dump(2) + "\n";
}

DGCategory reduce_category(const DGCategory& P, const Field& k2) {
    require(P.ring.width() == 1, "reduce: only field categories are reduced");
    if (P.ring.base() == k2) return P;
    DGCategory Q = P;
    Q.ring = Ring::field(k2);
    for (auto& [key, M] : Q.diffs)
        for (Scalar& v : M.a) v = k2.canon(v);
    std::map<const CompBlock*, std::shared_ptr<const CompBlock>> seen;
    for (auto& [key, blk] : Q.comps) {
        auto it = seen.find(blk.get());
        if (it != seen.end()) {
            blk = it->second;
            continue;
        }
        auto copy = std::make_shared<CompBlock>(*blk);
        for (Scalar& v : copy->t) v = k2.canon(v);
        seen[blk.get()] = copy;
        blk = std::move(copy);
    }
    for (auto& id : Q.ids)
        for (Scalar& v : id) v = k2.canon(v);
    return Q;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot open file for writing: " + path);
    out << text;
    require(out.good(), "write failed: " + path);
}

} // namespace mcdg
