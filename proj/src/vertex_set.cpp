#include "gridcds/vertex_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gridcds/errors.hpp"

namespace gridcds {

VertexSet::VertexSet(GridDims dims) : dims_(dims), mask_(dims.cell_count(), 0) {}

VertexSet::VertexSet(GridDims dims, std::initializer_list<Vertex> cells) : VertexSet(dims) {
    for (Vertex v : cells) insert(v);
}

VertexSet::VertexSet(GridDims dims, const std::vector<Vertex>& cells) : VertexSet(dims) {
    for (Vertex v : cells) insert(v);
}

bool VertexSet::contains(Vertex v) const noexcept {
    return in_grid(v, dims_) && mask_[cell_index(v, dims_)] != 0;
}

bool VertexSet::insert(Vertex v) {
    if (!in_grid(v, dims_)) {
        throw InputError("cell (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                         ") outside " + std::to_string(dims_.n) + "x" + std::to_string(dims_.m));
    }
    auto& slot = mask_[cell_index(v, dims_)];
    if (slot) return false;
    slot = 1;
    ++count_;
    return true;
}

bool VertexSet::erase(Vertex v) {
    if (!in_grid(v, dims_)) return false;
    auto& slot = mask_[cell_index(v, dims_)];
    if (!slot) return false;
    slot = 0;
    --count_;
    return true;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(count_);
    for (std::size_t k = 0; k < mask_.size(); ++k) {
        if (mask_[k]) out.push_back(cell_at(k, dims_));
    }
    return out;
}

VertexSet VertexSet::transposed() const {
    VertexSet t(dims_.transposed());
    for (Vertex v : members()) t.insert(Vertex{v.j, v.i});
    return t;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string to_text(const VertexSet& s) {
    const GridDims d = s.dims();
    std::string out = std::to_string(d.n) + " " + std::to_string(d.m) + "\n";
    out.reserve(out.size() + d.cell_count() + static_cast<std::size_t>(d.n));
    for (int i = 1; i <= d.n; ++i) {
        for (int j = 1; j <= d.m; ++j) out.push_back(s.contains({i, j}) ? '#' : '.');
        out.push_back('\n');
    }
    return out;
}

VertexSet parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!std::getline(in, header)) throw InputError("empty vertex-set text");
    std::istringstream hs(header);
    int n = 0;
    int m = 0;
    std::string trailing;
    if (!(hs >> n >> m) || (hs >> trailing)) {
        throw InputError("first line must be \"n m\", got \"" + header + "\"");
    }
    VertexSet s(GridDims(n, m));
    std::string line;
    for (int i = 1; i <= n; ++i) {
        if (!std::getline(in, line)) {
            throw InputError("expected " + std::to_string(n) + " grid rows, got " +
                             std::to_string(i - 1));
        }
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.size() != static_cast<std::size_t>(m)) {
            throw InputError("row " + std::to_string(i) + " has " + std::to_string(line.size()) +
                             " characters, expected " + std::to_string(m));
        }
        for (int j = 1; j <= m; ++j) {
            const char c = line[static_cast<std::size_t>(j - 1)];
            if (c == '#') {
                s.insert({i, j});
            } else if (c != '.') {
                throw InputError("row " + std::to_string(i) + ": unexpected character '" +
                                 std::string(1, c) + "'");
            }
        }
    }
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw InputError("trailing content after grid rows");
        }
    }
    return s;
}

nlohmann::json to_json(const VertexSet& s) {
    nlohmann::json cells = nlohmann::json::array();
    for (Vertex v : s.members()) cells.push_back({v.i, v.j});
    return {{"n", s.dims().n}, {"m", s.dims().m}, {"cells", std::move(cells)}};
}

VertexSet vertex_set_from_json(const nlohmann::json& j) {
    try {
        VertexSet s(GridDims(j.at("n").get<int>(), j.at("m").get<int>()));
        for (const auto& c : j.at("cells")) {
            if (!c.is_array() || c.size() != 2) throw InputError("cells entries must be [i, j]");
            s.insert({c[0].get<int>(), c[1].get<int>()});
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed vertex-set JSON: ") + e.what());
    }
}

VertexSet parse_vertex_set(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(std::string("invalid JSON: ") + e.what());
        }
        return vertex_set_from_json(j);
    }
    return parse_text(text);
}

std::string to_svg(const VertexSet& s) {
    constexpr int kPitch = 24;
    constexpr int kMargin = 16;
    constexpr int kRadius = 5;
    const GridDims d = s.dims();
    const int width = 2 * kMargin + (d.m - 1) * kPitch;
    const int height = 2 * kMargin + (d.n - 1) * kPitch;
    auto x = [&](int j) { return kMargin + (j - 1) * kPitch; };
    auto y = [&](int i) { return kMargin + (i - 1) * kPitch; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<g stroke=\"#999\" stroke-width=\"1\">\n";
    for (int i = 1; i <= d.n; ++i) {
        os << "<line x1=\"" << x(1) << "\" y1=\"" << y(i) << "\" x2=\"" << x(d.m) << "\" y2=\""
           << y(i) << "\"/>\n";
    }
    for (int j = 1; j <= d.m; ++j) {
        os << "<line x1=\"" << x(j) << "\" y1=\"" << y(1) << "\" x2=\"" << x(j) << "\" y2=\""
           << y(d.n) << "\"/>\n";
    }
    os << "</g>\n<g stroke=\"#000\" stroke-width=\"1\">\n";
    for (int i = 1; i <= d.n; ++i) {
        for (int j = 1; j <= d.m; ++j) {
            os << "<circle cx=\"" << x(j) << "\" cy=\"" << y(i) << "\" r=\"" << kRadius
               << "\" fill=\"" << (s.contains({i, j}) ? "#000" : "#fff") << "\"/>\n";
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << to_text(s); }

}  // namespace gridcds
