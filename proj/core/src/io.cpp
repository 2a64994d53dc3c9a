#include "dirichlet/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dirichlet/error.hpp"

namespace dirichlet {

namespace {

using nlohmann::json;

// Byte offset -> 1-based line/column, for parse errors.
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }
}

Point point_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(std::string(what) + " must be a [x, y] number pair");
    }
    const Point p{j[0].get<double>(), j[1].get<double>()};
    if (!is_finite(p)) throw ParseError(std::string(what) + " coordinates must be finite");
    return p;
}

std::vector<Point> points_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Point> out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(point_from_json(e, what));
    return out;
}

BoundingBox bbox_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) {
        throw ParseError("\"bbox\" must be [min_x, min_y, max_x, max_y]");
    }
    for (const json& e : j) {
        if (!e.is_number()) throw ParseError("\"bbox\" entries must be numbers");
    }
    const BoundingBox box{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
                          j[3].get<double>()};
    validate(box);
    return box;
}

// --- deterministic writer -------------------------------------------------

class JsonWriter {
  public:
    void number(double v) { out_ += format_number(v); }
    void raw(const std::string& s) { out_ += s; }
    void point(const Point& p) {
        raw("[");
        number(p.x);
        raw(", ");
        number(p.y);
        raw("]");
    }
    [[nodiscard]] std::string str() && { return std::move(out_); }

  private:
    std::string out_;
};

void write_points(JsonWriter& w, const std::vector<Point>& pts, const std::string& indent) {
    w.raw("[");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        w.raw(i == 0 ? "\n" : ",\n");
        w.raw(indent + "  ");
        w.point(pts[i]);
    }
    w.raw("\n" + indent + "]");
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SiteFileModel parse_sites(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("top-level value must be an object");
    if (!j.contains("sites")) throw ParseError("missing \"sites\" field");

    SiteFileModel model;
    model.sites = points_from_json(j["sites"], "site");
    if (model.sites.empty()) {
        throw EmptyGeneratingSetError("\"sites\" must not be empty");
    }
    if (j.contains("bbox")) model.bbox = bbox_from_json(j["bbox"]);
    if (j.contains("tolerance")) {
        const json& t = j["tolerance"];
        if (!t.is_number()) throw ParseError("\"tolerance\" must be a number");
        const double tol = t.get<double>();
        if (!std::isfinite(tol) || tol <= 0.0) {
            throw ParseError("\"tolerance\" must be positive and finite");
        }
        model.tolerance = tol;
    }

    const BoundingBox box = effective_bbox(model);
    const double tol = effective_tolerance(model, box);
    GeneratingSet gs{model.sites};
    validate(gs, tol);
    for (std::size_t i = 0; i < model.sites.size(); ++i) {
        if (!box.strictly_contains(model.sites[i])) {
            throw SiteOutsideBoxError("site " + std::to_string(i) +
                                      " is not strictly inside the bbox");
        }
    }
    return model;
}

std::string serialize_sites(const SiteFileModel& model) {
    JsonWriter w;
    w.raw("{\n  \"sites\": ");
    write_points(w, model.sites, "  ");
    if (model.bbox) {
        w.raw(",\n  \"bbox\": [");
        w.number(model.bbox->min_x);
        w.raw(", ");
        w.number(model.bbox->min_y);
        w.raw(", ");
        w.number(model.bbox->max_x);
        w.raw(", ");
        w.number(model.bbox->max_y);
        w.raw("]");
    }
    if (model.tolerance) {
        w.raw(",\n  \"tolerance\": ");
        w.number(*model.tolerance);
    }
    w.raw("\n}\n");
    return std::move(w).str();
}

BoundingBox effective_bbox(const SiteFileModel& model) {
    if (model.bbox) return *model.bbox;
    double min_x = model.sites[0].x, max_x = min_x;
    double min_y = model.sites[0].y, max_y = min_y;
    for (const Point& s : model.sites) {
        min_x = std::min(min_x, s.x);
        max_x = std::max(max_x, s.x);
        min_y = std::min(min_y, s.y);
        max_y = std::max(max_y, s.y);
    }
    const double diag = std::hypot(max_x - min_x, max_y - min_y);
    const double pad = diag > 0.0 ? 0.2 * diag : 1.0;
    return BoundingBox{min_x - pad, min_y - pad, max_x + pad, max_y + pad};
}

double effective_tolerance(const SiteFileModel& model, const BoundingBox& box) {
    return model.tolerance.value_or(kDefaultRelativeTolerance) * box.diagonal();
}

std::string diagram_to_json(const DiagramDocument& doc) {
    const VoronoiDiagram& d = doc.diagram;
    JsonWriter w;
    w.raw("{\n  \"sites\": ");
    write_points(w, d.generating_set.sites, "  ");

    w.raw(",\n  \"bbox\": [");
    w.number(d.bbox.min_x);
    w.raw(", ");
    w.number(d.bbox.min_y);
    w.raw(", ");
    w.number(d.bbox.max_x);
    w.raw(", ");
    w.number(d.bbox.max_y);
    w.raw("]");

    w.raw(",\n  \"tolerance\": ");
    w.number(d.tolerance / d.bbox.diagonal());

    w.raw(",\n  \"cells\": [");
    for (std::size_t i = 0; i < d.cells.size(); ++i) {
        const VoronoiCell& cell = d.cells[i];
        w.raw(i == 0 ? "\n" : ",\n");
        w.raw("    {\"site_id\": " + std::to_string(cell.site_id) + ", \"touches_boundary\": ");
        w.raw(cell.touches_boundary ? "true" : "false");
        w.raw(", \"vertices\": [");
        for (std::size_t v = 0; v < cell.polygon.vertices.size(); ++v) {
            if (v > 0) w.raw(", ");
            w.point(cell.polygon.vertices[v]);
        }
        w.raw("]}");
    }
    w.raw("\n  ]");

    w.raw(",\n  \"edges\": [");
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const VoronoiEdge& e = d.edges[i];
        w.raw(i == 0 ? "\n" : ",\n");
        w.raw("    {\"sites\": [" + std::to_string(e.site_a) + ", " + std::to_string(e.site_b) +
              "], \"endpoints\": [");
        w.point(e.segment.a);
        w.raw(", ");
        w.point(e.segment.b);
        w.raw("]}");
    }
    w.raw("\n  ]");

    w.raw(",\n  \"vertices\": [");
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        const VoronoiVertex& v = d.vertices[i];
        w.raw(i == 0 ? "\n" : ",\n");
        w.raw("    {\"point\": ");
        w.point(v.point);
        w.raw(", \"incident\": [");
        for (std::size_t k = 0; k < v.incident_sites.size(); ++k) {
            if (k > 0) w.raw(", ");
            w.raw(std::to_string(v.incident_sites[k]));
        }
        w.raw("]}");
    }
    w.raw("\n  ]");

    w.raw(",\n  \"proximity\": [");
    for (std::size_t i = 0; i < doc.proximity.edges.size(); ++i) {
        const ProximityEdge& e = doc.proximity.edges[i];
        w.raw(i == 0 ? "\n" : ",\n");
        w.raw("    {\"sites\": [" + std::to_string(e.site_a) + ", " + std::to_string(e.site_b) +
              "], \"kind\": \"" + to_string(e.kind) + "\"}");
    }
    w.raw("\n  ]");

    if (doc.topology) {
        w.raw(",\n  \"topology\": {\"families\": [");
        std::size_t i = 0;
        for (const RegionFamily& fam : doc.topology->families) {
            w.raw(i++ == 0 ? "\n" : ",\n");
            w.raw("    [");
            std::size_t k = 0;
            for (const std::size_t id : fam) {
                if (k++ > 0) w.raw(", ");
                w.raw(std::to_string(id));
            }
            w.raw("]");
        }
        w.raw("\n  ]}");
    }

    w.raw("\n}\n");
    return std::move(w).str();
}

namespace {

DiagramDocument diagram_from_parsed(const json& j);

}  // namespace

DiagramDocument diagram_from_json(const std::string& text) {
    const json j = parse_json(text);
    try {
        return diagram_from_parsed(j);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed diagram document: ") + e.what());
    }
}

namespace {

DiagramDocument diagram_from_parsed(const json& j) {
    if (!j.is_object()) throw ParseError("top-level value must be an object");
    for (const char* field : {"sites", "bbox", "tolerance", "cells", "edges", "vertices",
                              "proximity"}) {
        if (!j.contains(field)) {
            throw ParseError(std::string("missing \"") + field + "\" field");
        }
    }

    DiagramDocument doc;
    VoronoiDiagram& d = doc.diagram;
    d.generating_set.sites = points_from_json(j["sites"], "site");
    d.bbox = bbox_from_json(j["bbox"]);
    if (!j["tolerance"].is_number()) throw ParseError("\"tolerance\" must be a number");
    d.tolerance = j["tolerance"].get<double>() * d.bbox.diagonal();

    const std::size_t n = d.generating_set.size();
    const auto check_id = [&](std::size_t id) {
        if (id >= n) throw ParseError("site id " + std::to_string(id) + " out of range");
        return id;
    };

    for (const json& jc : j["cells"]) {
        VoronoiCell cell;
        cell.site_id = check_id(jc.at("site_id").get<std::size_t>());
        cell.site = d.generating_set.sites[cell.site_id];
        cell.polygon =
            make_convex_polygon(points_from_json(jc.at("vertices"), "cell vertex"), d.tolerance);
        cell.touches_boundary = jc.at("touches_boundary").get<bool>();
        d.cells.push_back(std::move(cell));
    }
    if (d.cells.size() != n) throw ParseError("expected one cell per site");

    for (const json& je : j["edges"]) {
        VoronoiEdge e;
        e.site_a = check_id(je.at("sites").at(0).get<std::size_t>());
        e.site_b = check_id(je.at("sites").at(1).get<std::size_t>());
        e.segment.a = point_from_json(je.at("endpoints").at(0), "edge endpoint");
        e.segment.b = point_from_json(je.at("endpoints").at(1), "edge endpoint");
        d.edges.push_back(e);
    }

    for (const json& jv : j["vertices"]) {
        VoronoiVertex v;
        v.point = point_from_json(jv.at("point"), "vertex point");
        for (const json& id : jv.at("incident")) {
            v.incident_sites.push_back(check_id(id.get<std::size_t>()));
        }
        d.vertices.push_back(std::move(v));
    }

    doc.proximity.node_count = n;
    for (const json& je : j["proximity"]) {
        ProximityEdge e;
        e.site_a = check_id(je.at("sites").at(0).get<std::size_t>());
        e.site_b = check_id(je.at("sites").at(1).get<std::size_t>());
        const std::string kind = je.at("kind").get<std::string>();
        if (kind == "edge") {
            e.kind = RegionKind::Edge;
        } else if (kind == "vertex") {
            e.kind = RegionKind::Vertex;
        } else {
            throw ParseError("unknown proximity kind \"" + kind + "\"");
        }
        doc.proximity.edges.push_back(e);
    }

    if (j.contains("topology")) {
        LeaderTopology topo;
        topo.region_count = n;
        for (const json& jf : j["topology"].at("families")) {
            RegionFamily fam;
            for (const json& id : jf) fam.insert(check_id(id.get<std::size_t>()));
            topo.families.insert(std::move(fam));
        }
        doc.topology = std::move(topo);
    }
    return doc;
}

}  // namespace

DensityGrid parse_pgm(const std::string& bytes, const BoundingBox& world) {
    std::size_t pos = 0;
    const auto skip_space_and_comments = [&] {
        while (pos < bytes.size()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    };
    const auto read_token = [&]() -> std::string {
        skip_space_and_comments();
        const std::size_t start = pos;
        while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos])) &&
               bytes[pos] != '#') {
            ++pos;
        }
        if (start == pos) throw ParseError("unexpected end of PGM header");
        return bytes.substr(start, pos - start);
    };
    const auto read_uint = [&](const char* what) -> std::size_t {
        const std::string tok = read_token();
        std::size_t value = 0;
        for (const char c : tok) {
            if (c < '0' || c > '9') {
                throw ParseError(std::string("invalid ") + what + " in PGM header");
            }
            value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        return value;
    };

    if (read_token() != "P5") throw ParseError("not a binary PGM (expected magic \"P5\")");
    DensityGrid grid;
    grid.width = read_uint("width");
    grid.height = read_uint("height");
    const std::size_t maxval = read_uint("maxval");
    if (grid.width == 0 || grid.height == 0) throw ParseError("PGM dimensions must be positive");
    if (maxval == 0 || maxval > 65535) throw ParseError("PGM maxval must be in [1, 65535]");
    ++pos;  // single whitespace byte after maxval

    const std::size_t count = grid.width * grid.height;
    const std::size_t stride = maxval > 255 ? 2 : 1;
    if (pos > bytes.size() || bytes.size() - pos < count * stride) {
        throw ParseError("PGM raster is truncated");
    }

    grid.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t raw = static_cast<unsigned char>(bytes[pos + i * stride]);
        if (stride == 2) {
            raw = raw * 256 + static_cast<unsigned char>(bytes[pos + i * stride + 1]);
        }
        grid.values.push_back(static_cast<double>(raw) / static_cast<double>(maxval));
    }
    grid.world = world;
    validate(grid);
    return grid;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

}  // namespace dirichlet
