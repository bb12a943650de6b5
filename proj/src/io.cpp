#include "thue/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace thue {

namespace {

using nlohmann::json;

std::string num(double v) {
    if (!std::isfinite(v)) throw FormatError("cannot serialize non-finite number");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double get_number(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number()) throw FormatError(std::string("missing or non-numeric '") + key + "'");
    return it->get<double>();
}

json domain_json(const Domain& d) {
    return {{"kind", to_string(d.kind)}, {"width", d.width}, {"height", d.height}, {"margin", d.margin}};
}

json point_json(Point p) { return json::array({p.x, p.y}); }

json extremal_json(const std::vector<double>& e) {
    if (e.size() == 1) return e.front();
    return e;
}

}  // namespace

std::string packing_to_json(const PackingConfiguration& config) {
    const Domain& d = config.domain;
    std::ostringstream os;
    os << "{\n  \"radius\": " << num(PackingConfiguration::radius) << ",\n";
    os << "  \"domain\": {\"kind\": \"" << to_string(d.kind) << "\", \"width\": " << num(d.width)
       << ", \"height\": " << num(d.height) << ", \"margin\": " << num(d.margin) << "},\n";
    os << "  \"centers\": [";
    for (std::size_t i = 0; i < config.centers.size(); ++i) {
        os << (i == 0 ? "\n    [" : ",\n    [") << num(config.centers[i].x) << ", " << num(config.centers[i].y) << "]";
    }
    os << (config.centers.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return os.str();
}

PackingConfiguration packing_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("packing JSON must be an object");
    if (j.contains("radius") && get_number(j, "radius") != 1.0) throw FormatError("only unit radius is supported");

    const auto dj = j.find("domain");
    if (dj == j.end() || !dj->is_object()) throw FormatError("missing 'domain' object");
    const auto kind = dj->find("kind");
    if (kind == dj->end() || !kind->is_string()) throw FormatError("missing domain 'kind'");
    PackingConfiguration config;
    const std::string k = kind->get<std::string>();
    if (k == "torus") {
        config.domain = Domain::torus(get_number(*dj, "width"), get_number(*dj, "height"));
        if (dj->contains("margin")) config.domain.margin = get_number(*dj, "margin");
    } else if (k == "box") {
        config.domain = Domain::box(get_number(*dj, "width"), get_number(*dj, "height"),
                                    dj->contains("margin") ? get_number(*dj, "margin") : 4.0);
    } else {
        throw FormatError("domain kind must be 'torus' or 'box', got '" + k + "'");
    }

    const auto cj = j.find("centers");
    if (cj == j.end() || !cj->is_array()) throw FormatError("missing 'centers' array");
    for (std::size_t i = 0; i < cj->size(); ++i) {
        const json& p = (*cj)[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw FormatError("center " + std::to_string(i) + " is not an [x, y] pair");
        }
        config.centers.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return config;
}

PackingConfiguration packing_from_csv(const std::string& text, const Domain& domain) {
    PackingConfiguration config{domain, {}};
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto comma = line.find(',');
        bool ok = comma != std::string::npos;
        double x = 0.0;
        double y = 0.0;
        if (ok) {
            try {
                std::size_t used = 0;
                x = std::stod(line.substr(0, comma), &used);
                const std::string rest = line.substr(comma + 1);
                y = std::stod(rest, &used);
                ok = rest.find_first_not_of(" \t\r", used) == std::string::npos;
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) {
            if (config.centers.empty() && lineno == 1) continue;  // header
            throw FormatError("CSV line " + std::to_string(lineno) + " is not an x,y pair");
        }
        config.centers.push_back({x, y});
    }
    return config;
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json violations = json::array();
        for (const CheckViolation& v : c.violations) {
            violations.push_back({{"location", v.location}, {"x", v.where.x}, {"y", v.where.y}, {"value", v.value}});
        }
        json entry{{"id", c.id}, {"pass", c.pass}, {"extremal", extremal_json(c.extremal)}, {"violations", violations}};
        if (c.informational) entry["informational"] = true;
        if (!c.note.empty()) entry["note"] = c.note;
        checks.push_back(entry);
    }
    json sat{{"saturated", r.saturation.saturated}};
    if (r.saturation.witness) {
        sat["witness"] = {{"center", point_json(r.saturation.witness->center)},
                          {"radius", r.saturation.witness->radius}};
    }
    json out{
        {"n", r.n},
        {"domain", domain_json(r.domain)},
        {"density", r.density},
        {"saturated", r.saturation.saturated},
        {"saturation", sat},
        {"tolerances", {{"eps_eq", r.tol.eps_eq}, {"eps_merge", r.tol.eps_merge}, {"eps_area", r.tol.eps_area}}},
        {"checks", checks},
        {"skipped", r.skipped},
        {"l_triangles", {{"count", r.l_triangles.count}, {"min_area", r.l_triangles.min_area}, {"max_area", r.l_triangles.max_area}}},
        {"cells", {{"analyzed", r.analyzed_cells}, {"excluded", r.excluded_cells}}},
        {"verdict", r.verdict},
    };
    return out;
}

std::vector<Point> violation_points(const json& report) {
    std::vector<Point> out;
    if (!report.is_object() || !report.contains("checks") || !report["checks"].is_array()) {
        throw FormatError("report JSON has no 'checks' array");
    }
    for (const json& c : report["checks"]) {
        if (!c.contains("violations")) continue;
        for (const json& v : c["violations"]) {
            if (v.contains("x") && v.contains("y") && v["x"].is_number() && v["y"].is_number()) {
                out.push_back({v["x"].get<double>(), v["y"].get<double>()});
            }
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << content;
    if (!out) throw FormatError("write to '" + path + "' failed");
}

PackingConfiguration load_packing(const std::string& path, const std::optional<Domain>& csv_domain) {
    const std::string text = read_file(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
        if (!csv_domain) throw FormatError("CSV input needs --torus or --box");
        return packing_from_csv(text, *csv_domain);
    }
    return packing_from_json(text);
}

}  // namespace thue
