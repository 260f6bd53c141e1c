#include "fpade/compact_set.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace fpade {

namespace {

Cplx parse_pair(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(std::string(what) + " must be an [re, im] pair");
    return Cplx(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

CompactSet::CompactSet(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

CompactSet CompactSet::disk(double radius) {
    if (!(radius > 0.0)) throw ConfigError("disk radius must be positive");
    std::ostringstream name;
    name << "disk:" << radius;
    CompactSet k(Kind::Disk, name.str());
    k.radius_ = radius;
    return k;
}

CompactSet CompactSet::circle(double radius) {
    if (!(radius > 0.0)) throw ConfigError("circle radius must be positive");
    std::ostringstream name;
    name << "circle:" << radius;
    CompactSet k(Kind::Circle, name.str());
    k.radius_ = radius;
    return k;
}

CompactSet CompactSet::segment(Cplx a, Cplx b) {
    if (std::abs(a - b) == 0.0) throw ConfigError("segment endpoints must differ");
    std::ostringstream name;
    name << "segment:" << a.real() << "," << a.imag() << "," << b.real() << ","
         << b.imag();
    CompactSet k(Kind::Segment, name.str());
    k.seg_a_ = a;
    k.seg_b_ = b;
    return k;
}

CompactSet CompactSet::polygon(std::vector<Cplx> vertices) {
    if (vertices.size() < 3) throw ConfigError("polygon needs at least 3 vertices");
    CompactSet k(Kind::Polygon, "polygon");
    k.points_ = std::move(vertices);
    double perimeter = 0.0;
    for (size_t i = 0; i < k.points_.size(); ++i)
        perimeter += std::abs(k.points_[(i + 1) % k.points_.size()] - k.points_[i]);
    if (!(perimeter > 0.0)) throw ConfigError("polygon has zero perimeter");
    return k;
}

CompactSet CompactSet::cloud(std::vector<Cplx> points) {
    if (points.empty()) throw ConfigError("point cloud must be nonempty");
    CompactSet k(Kind::Cloud, "cloud");
    k.points_ = std::move(points);
    return k;
}

CompactSet CompactSet::parse(const std::string& descriptor) {
    if (!descriptor.empty() && descriptor[0] == '{') return from_json(descriptor);
    const size_t colon = descriptor.find(':');
    const std::string head = descriptor.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
    auto numbers = [&rest, &descriptor]() {
        std::vector<double> out;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                out.push_back(std::stod(item));
            } catch (const std::logic_error&) {
                throw ConfigError("bad number in set descriptor '" + descriptor + "'");
            }
        }
        return out;
    };
    if (head == "circle" || head == "disk") {
        const auto v = numbers();
        if (v.size() != 1) throw ConfigError("expected '" + head + ":R'");
        return head == "circle" ? circle(v[0]) : disk(v[0]);
    }
    if (head == "segment") {
        const auto v = numbers();
        if (v.size() != 4)
            throw ConfigError("expected 'segment:ax,ay,bx,by'");
        return segment(Cplx(v[0], v[1]), Cplx(v[2], v[3]));
    }
    if (head == "square") {
        const auto v = numbers();
        if (v.size() != 1 || !(v[0] > 0.0)) throw ConfigError("expected 'square:side'");
        const double h = v[0] / 2.0;
        return polygon({Cplx(-h, -h), Cplx(h, -h), Cplx(h, h), Cplx(-h, h)});
    }
    throw ConfigError("unknown set descriptor '" + descriptor + "'");
}

CompactSet CompactSet::from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad set JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("set JSON must be an object with a 'kind' field");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "circle") return circle(j.at("R").get<double>());
        if (kind == "disk") return disk(j.at("R").get<double>());
        if (kind == "segment")
            return segment(parse_pair(j.at("a"), "segment endpoint"),
                           parse_pair(j.at("b"), "segment endpoint"));
        if (kind == "polygon" || kind == "cloud") {
            const char* field = kind == "polygon" ? "vertices" : "points";
            std::vector<Cplx> pts;
            for (const auto& entry : j.at(field)) pts.push_back(parse_pair(entry, field));
            return kind == "polygon" ? polygon(std::move(pts)) : cloud(std::move(pts));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("set JSON for kind '" + kind + "': " + e.what());
    }
    throw ConfigError("unknown set kind '" + kind + "'");
}

std::vector<Cplx> CompactSet::boundary_grid(int n) const {
    if (n < 2) throw DomainError("grid needs at least 2 points");
    std::vector<Cplx> grid;
    switch (kind_) {
        case Kind::Disk:
        case Kind::Circle: {
            grid.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double t = 2.0 * M_PI * i / n;
                grid.emplace_back(radius_ * std::cos(t), radius_ * std::sin(t));
            }
            break;
        }
        case Kind::Segment: {
            grid.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / (n - 1);
                grid.push_back(seg_a_ + (seg_b_ - seg_a_) * t);
            }
            break;
        }
        case Kind::Polygon: {
            // Corners always belong to the grid (extremal configurations
            // live there); the remaining points spread by arclength.
            const int v = static_cast<int>(points_.size());
            grid = points_;
            std::vector<double> edge_len(points_.size());
            double perimeter = 0.0;
            for (size_t i = 0; i < points_.size(); ++i) {
                edge_len[i] = std::abs(points_[(i + 1) % points_.size()] - points_[i]);
                perimeter += edge_len[i];
            }
            const int extra = std::max(0, n - v);
            for (int i = 0; i < extra; ++i) {
                double s = perimeter * (i + 0.5) / extra;
                size_t e = 0;
                while (e + 1 < edge_len.size() && s > edge_len[e]) s -= edge_len[e++];
                const Cplx a = points_[e];
                const Cplx b = points_[(e + 1) % points_.size()];
                grid.push_back(a + (b - a) * (s / edge_len[e]));
            }
            break;
        }
        case Kind::Cloud:
            grid = points_;
            break;
    }
    return grid;
}

double CompactSet::enclosing_radius() const {
    switch (kind_) {
        case Kind::Disk:
        case Kind::Circle:
            return radius_;
        case Kind::Segment:
            return std::max(std::abs(seg_a_), std::abs(seg_b_));
        case Kind::Polygon:
        case Kind::Cloud: {
            double r = 0.0;
            for (const Cplx& p : points_) r = std::max(r, std::abs(p));
            return r;
        }
    }
    return 0.0;
}

std::optional<double> CompactSet::known_diameter() const {
    switch (kind_) {
        case Kind::Disk:
        case Kind::Circle:
            return radius_;
        case Kind::Segment:
            return std::abs(seg_b_ - seg_a_) / 4.0;
        default:
            return std::nullopt;
    }
}

std::optional<double> CompactSet::known_chebyshev(int k) const {
    if (k < 1) return std::nullopt;
    switch (kind_) {
        case Kind::Disk:
        case Kind::Circle:
            return radius_;
        case Kind::Segment:
            return (std::abs(seg_b_ - seg_a_) / 4.0) * std::pow(2.0, 1.0 / k);
        default:
            return std::nullopt;
    }
}

}  // namespace fpade
