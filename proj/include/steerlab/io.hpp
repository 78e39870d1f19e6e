#pragma once

#include <string>
#include <vector>

namespace steerlab {

// Reproducibility record carried verbatim in every output file header.
struct RunManifest {
    std::string command;
    std::string scenario = "-";
    std::string alpha = "-";
    int samples = 0;
    long seed = 0;
    std::string output_path = "-";

    std::string to_line() const;
};

struct TradeoffRow {
    double s1 = 0.0;
    double s2 = 0.0;
    std::string segment_label;
    std::string case_lambda = "-";
};

std::string tradeoff_csv(const RunManifest& manifest, const std::vector<TradeoffRow>& rows);
std::string tradeoff_json(const RunManifest& manifest, const std::vector<TradeoffRow>& rows);

// Parsers used by the round-trip checks.
std::vector<TradeoffRow> parse_tradeoff_csv(const std::string& text);
std::vector<TradeoffRow> parse_tradeoff_json(const std::string& text);

void write_file(const std::string& path, const std::string& content);

}  // namespace steerlab
