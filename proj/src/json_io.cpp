#include "lrvan/json_io.hpp"

#include <sstream>

namespace lrvan {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("partition JSON must be an array of integers");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("partition JSON must be an array of integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

json to_json(const EdgeLabeledTableau& t) {
    json j;
    j["outer"] = to_json(t.shape().outer);
    j["inner"] = to_json(t.shape().inner);
    j["boxes"] = json::array();
    for (const auto& [pos, label] : t.boxes()) j["boxes"].push_back({pos.first, pos.second, label});
    j["edges"] = json::array();
    for (const auto& [pos, labels] : t.edges())
        j["edges"].push_back({pos.first, pos.second, labels});
    return j;
}

EdgeLabeledTableau tableau_from_json(const json& j) {
    SkewShape shape(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
    EdgeLabeledTableau::BoxMap boxes;
    for (const auto& b : j.at("boxes"))
        boxes[{b.at(0).get<int>(), b.at(1).get<int>()}] = b.at(2).get<int>();
    EdgeLabeledTableau::EdgeMap edges;
    for (const auto& e : j.at("edges"))
        edges[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<std::vector<int>>();
    return EdgeLabeledTableau(std::move(shape), std::move(boxes), std::move(edges));
}

json to_json(const ConstraintSystem& sys) {
    json j;
    j["num_vars"] = sys.num_vars;
    j["shape_rows"] = sys.shape_rows;
    j["labels"] = sys.labels;
    auto rows_to_json = [](const std::vector<ConstraintRow>& rows) {
        json out = json::array();
        for (const auto& row : rows) {
            json r;
            r["tag"] = std::string(1, static_cast<char>(row.tag));
            r["i"] = row.i;
            r["k"] = row.k;
            r["coeffs"] = row.coeffs;
            r["rhs"] = row.rhs;
            out.push_back(std::move(r));
        }
        return out;
    };
    j["equalities"] = rows_to_json(sys.equalities);
    j["inequalities"] = rows_to_json(sys.inequalities);
    return j;
}

namespace {

std::string var_name(const ConstraintSystem& sys, int v) {
    int pair = v / 2;
    int k = pair / sys.shape_rows + 1;
    int i = pair % sys.shape_rows + 1;
    return std::string(v % 2 == 0 ? "rB" : "rE") + "[" + std::to_string(k) + "][" +
           std::to_string(i) + "]";
}

void append_row(std::ostringstream& os, const ConstraintSystem& sys, const ConstraintRow& row,
                bool eq) {
    os << static_cast<char>(row.tag) << '(' << row.i << ',' << row.k << "): ";
    bool any = false;
    for (int v = 0; v < sys.num_vars; ++v) {
        if (row.coeffs[v] == 0) continue;
        if (any) os << ' ';
        os << (row.coeffs[v] > 0 ? '+' : '-') << var_name(sys, v);
        any = true;
    }
    if (!any) os << '0';
    os << (eq ? " = " : " <= ") << row.rhs << '\n';
}

}  // namespace

std::string dump_text(const ConstraintSystem& sys) {
    std::ostringstream os;
    for (const auto& row : sys.equalities) append_row(os, sys, row, true);
    for (const auto& row : sys.inequalities) append_row(os, sys, row, false);
    return os.str();
}

std::string render_text(const EdgeLabeledTableau& t) {
    std::ostringstream os;
    const SkewShape& sh = t.shape();
    for (int i = 1; i <= sh.rows(); ++i) {
        os << "row " << i << ":";
        for (int j = 1; j <= sh.outer.part(i); ++j) {
            if (sh.has_box(i, j)) os << ' ' << t.box(i, j);
            else os << " .";
        }
        os << '\n';
        bool any = false;
        std::ostringstream edge_line;
        for (int j = 1; j <= sh.outer.part(i); ++j) {
            const auto& labels = t.edge(i, j);
            if (labels.empty()) continue;
            any = true;
            edge_line << " col" << j << "={";
            for (std::size_t a = 0; a < labels.size(); ++a)
                edge_line << (a ? "," : "") << labels[a];
            edge_line << '}';
        }
        if (any) os << "edge " << i << "+1/2:" << edge_line.str() << '\n';
    }
    return os.str();
}

}  // namespace lrvan
