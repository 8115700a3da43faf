#include "tilt/gridio.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tilt {

const std::string* GridDocument::get(const std::string& key) const {
    for (auto& kv : meta)
        if (kv.first == key) return &kv.second;
    return nullptr;
}

void GridDocument::set(const std::string& key, const std::string& value) {
    for (auto& kv : meta)
        if (kv.first == key) {
            kv.second = value;
            return;
        }
    meta.emplace_back(key, value);
}

Pixel parse_pixel(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::ParseError, "bad pixel '" + s + "'");
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad pixel '" + s + "'");
    }
}

std::vector<Pixel> parse_pixel_list(const std::string& s) {
    std::vector<Pixel> out;
    std::string cur;
    for (char c : s + ";") {
        if (c == ';') {
            auto a = cur.find_first_not_of(" \t");
            if (a != std::string::npos) out.push_back(parse_pixel(cur.substr(a)));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::string format_pixel_list(const std::vector<Pixel>& px) {
    std::string s;
    for (size_t i = 0; i < px.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(px[i].x) + "," + std::to_string(px[i].y);
    }
    return s;
}

GridDocument parse_grid(const std::string& text) {
    std::vector<std::string> lines;
    std::vector<std::pair<std::string, std::string>> meta;
    {
        std::istringstream is(text);
        std::string line;
        bool inMeta = false;
        while (std::getline(is, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!inMeta && line == "---") {
                inMeta = true;
                continue;
            }
            if (inMeta) {
                if (line.find_first_not_of(" \t") == std::string::npos) continue;
                auto colon = line.find(':');
                if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "bad metadata line '" + line + "'");
                std::string k = line.substr(0, colon), v = line.substr(colon + 1);
                auto t = [](std::string s) {
                    auto a = s.find_first_not_of(" \t");
                    if (a == std::string::npos) return std::string();
                    auto b = s.find_last_not_of(" \t");
                    return s.substr(a, b - a + 1);
                };
                meta.emplace_back(t(k), t(v));
            } else {
                lines.push_back(line);
            }
        }
    }
    while (!lines.empty() && lines.back().find_first_not_of(" .") == std::string::npos) lines.pop_back();
    Pixel origin{0, 0};
    for (auto& kv : meta)
        if (kv.first == "origin") origin = parse_pixel(kv.second);
    std::vector<Pixel> V, C, T;
    int H = static_cast<int>(lines.size());
    for (int r = 0; r < H; ++r) {
        for (int col = 0; col < static_cast<int>(lines[r].size()); ++col) {
            char ch = lines[r][col];
            Pixel p{origin.x + col, origin.y + (H - 1 - r)};
            switch (ch) {
                case '.': case ' ': break;
                case '#': V.push_back(p); break;
                case 'o': V.push_back(p); C.push_back(p); break;
                case 'X': V.push_back(p); T.push_back(p); break;
                case '@': V.push_back(p); C.push_back(p); T.push_back(p); break;
                default:
                    throw Error(ErrorKind::IllegalCharacter,
                                "character '" + std::string(1, ch) + "' at row " + std::to_string(r) + ", column " +
                                    std::to_string(col));
            }
        }
    }
    if (V.empty()) throw Error(ErrorKind::EmptyPolyomino, "grid has no pixels");
    GridDocument doc;
    doc.P = Polyomino(V);
    doc.C = make_config(doc.P, C);
    doc.targets = make_config(doc.P, T);
    for (auto& kv : meta)
        if (kv.first != "origin") doc.meta.push_back(kv);
    return doc;
}

std::string render_ascii(const Polyomino& P, const Config& C, const Config& targets) {
    int x0 = std::min(0, P.min_x()), y0 = std::min(0, P.min_y());
    int x1 = P.min_x() + P.width() - 1, y1 = P.min_y() + P.height() - 1;
    std::string out;
    for (int y = y1; y >= y0; --y) {
        std::string row;
        for (int x = x0; x <= x1; ++x) {
            int i = P.index({x, y});
            char ch = '.';
            if (i >= 0) {
                bool o = std::binary_search(C.begin(), C.end(), i);
                bool t = std::binary_search(targets.begin(), targets.end(), i);
                ch = o ? (t ? '@' : 'o') : (t ? 'X' : '#');
            }
            row += ch;
        }
        out += row + "\n";
    }
    return out;
}

std::string render_document(const GridDocument& doc) {
    std::string s = render_ascii(doc.P, doc.C, doc.targets);
    bool shifted = doc.P.min_x() < 0 || doc.P.min_y() < 0;
    if (!doc.meta.empty() || shifted) {
        s += "---\n";
        if (shifted)
            s += "origin: " + std::to_string(std::min(0, doc.P.min_x())) + "," + std::to_string(std::min(0, doc.P.min_y())) + "\n";
        for (auto& kv : doc.meta) s += kv.first + ": " + kv.second + "\n";
    }
    return s;
}

std::string render_svg(const GridDocument& doc, int cell) {
    const Polyomino& P = doc.P;
    int W = P.width() * cell, H = P.height() * cell;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
       << " " << H << "\">\n";
    auto X = [&](const Pixel& p) { return (p.x - P.min_x()) * cell; };
    auto Y = [&](const Pixel& p) { return (P.min_y() + P.height() - 1 - p.y) * cell; };
    for (int i = 0; i < P.size(); ++i) {
        const Pixel& p = P.pixel(i);
        bool t = std::binary_search(doc.targets.begin(), doc.targets.end(), i);
        os << "<rect x=\"" << X(p) << "\" y=\"" << Y(p) << "\" width=\"" << cell << "\" height=\"" << cell
           << "\" fill=\"" << (t ? "#f4c7c3" : "#e8e8e8") << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    }
    for (int i : doc.C) {
        const Pixel& p = P.pixel(i);
        os << "<circle cx=\"" << X(p) + cell / 2.0 << "\" cy=\"" << Y(p) + cell / 2.0 << "\" r=\"" << cell / 3.0
           << "\" fill=\"#1f4e9c\"/>\n";
    }
    if (const std::string* reps = doc.get("representatives")) {
        auto px = parse_pixel_list(*reps);
        for (size_t k = 0; k < px.size(); ++k) {
            if (!P.contains(px[k])) continue;
            os << "<text x=\"" << X(px[k]) + 2 << "\" y=\"" << Y(px[k]) + cell - 3 << "\" font-size=\"" << cell * 0.6
               << "\" fill=\"#b00\">" << k << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tilt
