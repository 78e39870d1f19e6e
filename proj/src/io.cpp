#include "steerlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "steerlab/angles.hpp"

namespace steerlab {

std::string RunManifest::to_line() const {
    std::ostringstream os;
    os << "command=" << command << " scenario=" << scenario << " alpha=" << alpha
       << " samples=" << samples << " seed=" << seed << " output=" << output_path;
    return os.str();
}

std::string tradeoff_csv(const RunManifest& manifest, const std::vector<TradeoffRow>& rows) {
    std::ostringstream os;
    os << "# manifest: " << manifest.to_line() << "\n";
    os << "s1,s2,segment_label,case_lambda\n";
    for (const TradeoffRow& r : rows) {
        os << format_double(r.s1) << ',' << format_double(r.s2) << ',' << r.segment_label << ','
           << r.case_lambda << "\n";
    }
    return os.str();
}

std::string tradeoff_json(const RunManifest& manifest, const std::vector<TradeoffRow>& rows) {
    nlohmann::ordered_json doc;
    doc["manifest"] = {{"command", manifest.command}, {"scenario", manifest.scenario},
                       {"alpha", manifest.alpha},     {"samples", manifest.samples},
                       {"seed", manifest.seed},       {"output", manifest.output_path}};
    doc["rows"] = nlohmann::ordered_json::array();
    for (const TradeoffRow& r : rows) {
        doc["rows"].push_back({{"s1", r.s1},
                               {"s2", r.s2},
                               {"segment_label", r.segment_label},
                               {"case_lambda", r.case_lambda}});
    }
    return doc.dump(2) + "\n";
}

std::vector<TradeoffRow> parse_tradeoff_csv(const std::string& text) {
    std::vector<TradeoffRow> rows;
    std::istringstream is(text);
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "s1,s2,segment_label,case_lambda") {
                throw std::runtime_error("unexpected CSV header: " + line);
            }
            header_seen = true;
            continue;
        }
        TradeoffRow r;
        std::istringstream ls(line);
        std::string field;
        std::getline(ls, field, ',');
        r.s1 = std::stod(field);
        std::getline(ls, field, ',');
        r.s2 = std::stod(field);
        std::getline(ls, r.segment_label, ',');
        std::getline(ls, r.case_lambda, ',');
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<TradeoffRow> parse_tradeoff_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    std::vector<TradeoffRow> rows;
    for (const auto& item : doc.at("rows")) {
        rows.push_back({item.at("s1").get<double>(), item.at("s2").get<double>(),
                        item.at("segment_label").get<std::string>(),
                        item.at("case_lambda").get<std::string>()});
    }
    return rows;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace steerlab
