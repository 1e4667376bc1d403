#include "pmrank/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace pmrank {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
    std::string buf(s);
    if (buf.empty()) return std::nullopt;
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) return std::nullopt;
    return v;
}

// Calls fn(line_number, fields) for every non-blank line.
template <typename Fn>
void for_each_row(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        if (!trim(line).empty()) fn(line_no, split_csv_line(line));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        fields.emplace_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return fields;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

MosTable parse_mos_csv(std::string_view text) {
    MosTable table;
    bool first = true;
    for_each_row(text, [&](std::size_t line, const std::vector<std::string>& f) {
        const bool header = first && !f.empty() && f[0] == "video_id";
        first = false;
        if (header) return;
        if (f.size() != 2) throw CsvError(line, "expected 2 fields (video_id,mos), got " + std::to_string(f.size()));
        if (f[0].empty()) throw CsvError(line, "empty video_id");
        const auto v = parse_double(f[1]);
        if (!v || !std::isfinite(*v)) throw CsvError(line, "invalid mos value '" + f[1] + "'");
        table.ids.push_back(f[0]);
        table.mos.push_back(*v);
    });
    return table;
}

MosTable read_mos_csv(const std::filesystem::path& path) {
    return parse_mos_csv(read_text_file(path));
}

std::vector<EdgeRow> parse_edges_csv(std::string_view text, bool require_margin) {
    std::vector<EdgeRow> rows;
    bool first = true;
    for_each_row(text, [&](std::size_t line, const std::vector<std::string>& f) {
        const bool header = first && !f.empty() && f[0] == "left_id";
        first = false;
        if (header) return;
        if (f.size() != 2 && f.size() != 3) {
            throw CsvError(line, "expected left_id,right_id[,margin], got " + std::to_string(f.size()) + " fields");
        }
        if (f[0].empty() || f[1].empty()) throw CsvError(line, "empty vertex id");
        if (f[0] == f[1]) throw CsvError(line, "self-comparison of '" + f[0] + "'");
        EdgeRow row{f[0], f[1], std::nullopt, line};
        if (f.size() == 3) {
            const auto v = parse_double(f[2]);
            if (!v || !std::isfinite(*v)) throw CsvError(line, "invalid margin '" + f[2] + "'");
            row.margin = *v;
        } else if (require_margin) {
            throw CsvError(line, "missing margin column");
        }
        rows.push_back(std::move(row));
    });
    return rows;
}

std::vector<EdgeRow> read_edges_csv(const std::filesystem::path& path, bool require_margin) {
    return parse_edges_csv(read_text_file(path), require_margin);
}

std::string edges_csv(std::span<const VertexPair> edges) {
    std::string out = "left_id,right_id\n";
    for (const auto& e : edges) out += std::to_string(e.left) + "," + std::to_string(e.right) + "\n";
    return out;
}

std::string leaderboard_csv(std::span<const std::string> ids, const Leaderboard& board) {
    if (ids.size() != board.scores.size()) throw InvalidInput("leaderboard and id list differ in length");
    std::string out = "video_id,score,rank\n";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out += ids[i] + "," + format_fixed(board.scores[i], 6) + "," + std::to_string(board.ranks[i]) + "\n";
    }
    return out;
}

std::string convergence_csv(std::span<const MetricCurve> curves) {
    std::string out = "budget,method,metric,value\n";
    for (const auto& c : curves) {
        for (std::size_t b = 0; b < c.budgets.size(); ++b) {
            out += std::to_string(c.budgets[b]) + "," + std::string(to_string(c.method)) + "," +
                   std::string(to_string(c.metric)) + "," + format_fixed(c.values[b], 6) + "\n";
        }
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write file '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InvalidInput("failed writing '" + path.string() + "'");
}

}  // namespace pmrank
