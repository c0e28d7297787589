#include "hullwalk/lattice_path.hpp"

#include <cctype>
#include <json.hpp>

namespace hullwalk {

LatticePath::LatticePath(std::vector<IntVec2> points) : points_(std::move(points)) {
    require(!points_.empty(), "path must contain at least the origin");
    require(points_[0] == IntVec2{0, 0}, "path must start at the origin");
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const IntVec2 d = points_[i] - points_[i - 1];
        const bool unit = (d.x == 0 && (d.y == 1 || d.y == -1)) ||
                          (d.y == 0 && (d.x == 1 || d.x == -1));
        require(unit, "consecutive path points must differ by a unit axis step");
    }
}

LatticePath LatticePath::from_steps(std::string_view steps) {
    std::vector<IntVec2> pts;
    pts.reserve(steps.size() + 1);
    pts.push_back({0, 0});
    for (char c : steps) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        IntVec2 d;
        switch (std::toupper(static_cast<unsigned char>(c))) {
            case 'E': d = {1, 0}; break;
            case 'W': d = {-1, 0}; break;
            case 'N': d = {0, 1}; break;
            case 'S': d = {0, -1}; break;
            default: throw std::invalid_argument(std::string("unknown step letter: ") + c);
        }
        pts.push_back(pts.back() + d);
    }
    return LatticePath(std::move(pts));
}

LatticePath LatticePath::parse(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw std::invalid_argument("empty path input");

    if (text[i] == '[') {
        const auto doc = nlohmann::json::parse(text);
        require(doc.is_array(), "path JSON must be an array of [x, y] pairs");
        std::vector<IntVec2> pts;
        pts.reserve(doc.size());
        for (const auto& e : doc) {
            require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                        e[1].is_number_integer(),
                    "path JSON entries must be [x, y] integer pairs");
            pts.push_back({e[0].get<std::int64_t>(), e[1].get<std::int64_t>()});
        }
        return LatticePath(std::move(pts));
    }
    return from_steps(text);
}

} // namespace hullwalk
