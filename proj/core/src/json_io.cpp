#include "salkit/json_io.hpp"

#include <stdexcept>

#include <json.hpp>

#include "salkit/braidsym.hpp"

namespace salkit {

using json = nlohmann::ordered_json;

Arrangement arrangement_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("arrangement JSON: ") + e.what());
    }
    if (j.contains("family")) {
        std::string fam = j.at("family").get<std::string>();
        int n = j.at("n").get<int>();
        if (fam == "braid") return braid(n);
        if (fam == "center_of_mass") return center_of_mass(n, j.at("l").get<int>());
        throw std::invalid_argument("arrangement JSON: unknown family '" + fam + "'");
    }
    if (!j.contains("dimension") || !j.contains("normals"))
        throw std::invalid_argument("arrangement JSON: need dimension+normals or family");
    int dim = j.at("dimension").get<int>();
    std::vector<std::vector<long long>> normals;
    for (const auto& row : j.at("normals")) {
        std::vector<long long> a;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw std::invalid_argument("arrangement JSON: integer entries only");
            a.push_back(x.get<long long>());
        }
        normals.push_back(std::move(a));
    }
    return custom_arrangement(dim, normals);
}

std::string arrangement_to_json_text(const Arrangement& arr) {
    json j;
    if (arr.family == Family::braid) {
        j["family"] = "braid";
        j["n"] = arr.family_n;
    } else if (arr.family == Family::center_of_mass) {
        j["family"] = "center_of_mass";
        j["n"] = arr.family_n;
        j["l"] = arr.family_l;
    }
    j["dimension"] = arr.dim;
    json rows = json::array();
    for (const auto& h : arr.hyperplanes) rows.push_back(h.normal);
    j["normals"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string cw_to_json_text(const CWData& cw) {
    const int sep = cw.fl.arr.separator_index();
    json j;
    j["arrangement"] = cw.fl.arr.label();
    j["cells_per_dim"] = json::array();
    for (int d = 0; d <= cw.top_dim; ++d) j["cells_per_dim"].push_back(cw.count_of_dim(d));
    json cells = json::array();
    for (size_t i = 0; i < cw.cells.size(); ++i) {
        const SalCell& c = cw.cells[i];
        json jc;
        jc["id"] = i;
        jc["dim"] = c.dim;
        jc["face"] = to_string(cw.fl.faces[c.face], sep);
        jc["chamber"] = to_string(cw.fl.faces[c.chamber], sep);
        jc["covector"] = to_string(c.cov, sep);
        json bd = json::array();
        for (const auto& [f, inc] : cw.boundary[i]) bd.push_back(json::array({f, inc}));
        jc["boundary"] = std::move(bd);
        cells.push_back(std::move(jc));
    }
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

std::string quotient_to_json_text(const TwistedQuotientComplex& q, const SalvettiPipeline& pl) {
    json j;
    j["arrangement"] = pl.arr.label();
    j["p"] = q.p;
    j["twist"] = q.twist == Twist::sign ? "sign" : "trivial";
    json gens = json::array();
    for (int d = 0; d <= q.top_dim; ++d) {
        json jd = json::array();
        for (size_t i = 0; i < q.gens[d].size(); ++i) {
            json g;
            g["label"] = q.labels[d][i];
            if (pl.arr.family == Family::braid) {
                int rep = pl.orbits.rep[q.gens[d][i]];
                g["symbol"] = standard_partition(
                                  cell_to_symbol(pl.cw.cells[rep], pl.fl).lambda.shape())
                                  .str();
            }
            g["orbit_size"] = pl.orbits.members[q.gens[d][i]].size();
            jd.push_back(std::move(g));
        }
        gens.push_back(std::move(jd));
    }
    j["generators"] = std::move(gens);
    json bnds = json::array();
    for (int d = 1; d <= q.top_dim; ++d) {
        json b;
        b["degree"] = d;
        json rows_p = json::array(), rows_z = json::array();
        for (int r = 0; r < q.boundary[d].rows; ++r) {
            json rp = json::array(), rz = json::array();
            for (int c = 0; c < q.boundary[d].cols; ++c) {
                rp.push_back(q.boundary[d].at(r, c));
                rz.push_back(q.boundary_z[d].at(r, c));
            }
            rows_p.push_back(std::move(rp));
            rows_z.push_back(std::move(rz));
        }
        b["mod_p"] = std::move(rows_p);
        b["integer"] = std::move(rows_z);
        bnds.push_back(std::move(b));
    }
    j["boundaries"] = std::move(bnds);
    return j.dump(2) + "\n";
}

} // namespace salkit
