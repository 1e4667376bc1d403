#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmrank/aggregation.hpp"
#include "pmrank/errors.hpp"
#include "pmrank/graph_sampler.hpp"
#include "pmrank/metrics.hpp"
#include "pmrank/simulator.hpp"

namespace pmrank {

// Malformed CSV content; line is 1-based and counts the header.
class CsvError : public InvalidInput {
public:
    CsvError(std::size_t line, const std::string& what)
        : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct EdgeRow {
    std::string left_id;
    std::string right_id;
    std::optional<double> margin;
    std::size_t line = 0;
};

// Splits on commas and trims surrounding whitespace.
std::vector<std::string> split_csv_line(std::string_view line);

// "%.<decimals>f" without a negative sign on zero.
std::string format_fixed(double value, int decimals);

// Reads `video_id,mos`; the header row is optional.
MosTable parse_mos_csv(std::string_view text);
MosTable read_mos_csv(const std::filesystem::path& path);

// Reads `left_id,right_id[,margin]`; the header row is optional.
std::vector<EdgeRow> parse_edges_csv(std::string_view text, bool require_margin);
std::vector<EdgeRow> read_edges_csv(const std::filesystem::path& path, bool require_margin);

std::string edges_csv(std::span<const VertexPair> edges);
std::string leaderboard_csv(std::span<const std::string> ids, const Leaderboard& board);
std::string convergence_csv(std::span<const MetricCurve> curves);

// Throws InvalidInput naming the path when the file cannot be read.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace pmrank
