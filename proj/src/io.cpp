#include "stratarium/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace stratarium {

std::string format_double(double value)
{
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc())
        throw std::runtime_error("cannot format number");
    return std::string(buf, ptr);
}

std::string to_csv(const PointSet& points, bool header)
{
    std::string out;
    if (header) {
        for (Index k = 0; k < points.dim(); ++k) {
            if (k)
                out += ',';
            out += "x" + std::to_string(k);
        }
        out += '\n';
    }
    for (Index i = 0; i < points.size(); ++i) {
        for (Index k = 0; k < points.dim(); ++k) {
            if (k)
                out += ',';
            out += format_double(points.points(i, k));
        }
        out += '\n';
    }
    return out;
}

PointMatrix parse_csv(std::string_view text)
{
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (rows.empty() && line_no == 1) {
            char c = line.front();
            if (!(c == '-' || c == '+' || c == '.' || (c >= '0' && c <= '9')))
                continue;
        }
        std::vector<double> row;
        while (true) {
            auto comma = line.find(',');
            std::string_view field = line.substr(0, comma);
            while (!field.empty() && field.front() == ' ')
                field.remove_prefix(1);
            while (!field.empty() && field.back() == ' ')
                field.remove_suffix(1);
            if (!field.empty() && field.front() == '+')
                field.remove_prefix(1);
            double v = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
                throw std::invalid_argument("line " + std::to_string(line_no) + ": cannot parse '" +
                                            std::string(field) + "'");
            row.push_back(v);
            if (comma == std::string_view::npos)
                break;
            line = line.substr(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("line " + std::to_string(line_no) + ": inconsistent column count");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw std::invalid_argument("no points in input");
    PointMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k)
            m(static_cast<Index>(i), static_cast<Index>(k)) = rows[i][k];
    return m;
}

namespace {

nlohmann::json vector_json(const Eigen::VectorXd& v)
{
    return nlohmann::json(std::vector<double>(v.data(), v.data() + v.size()));
}

Eigen::VectorXd json_vector(const nlohmann::json& j)
{
    auto values = j.get<std::vector<double>>();
    return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Index>(values.size()));
}

} // namespace

std::string to_json(const Stratification& strat)
{
    nlohmann::json doc;
    doc["domain"] = {{"lower", vector_json(strat.domain.lower())}, {"upper", vector_json(strat.domain.upper())}};
    auto& strata = doc["strata"] = nlohmann::json::array();
    for (const auto& s : strat.strata)
        strata.push_back({{"lower", vector_json(s.box.lower())}, {"upper", vector_json(s.box.upper())}, {"count", s.count}});
    return doc.dump(1) + "\n";
}

Stratification stratification_from_json(std::string_view text)
{
    try {
        auto doc = nlohmann::json::parse(text);
        Hyperbox domain(json_vector(doc.at("domain").at("lower")), json_vector(doc.at("domain").at("upper")));
        std::vector<Stratum> strata;
        for (const auto& s : doc.at("strata")) {
            auto count = s.at("count").get<std::size_t>();
            strata.push_back({Hyperbox(json_vector(s.at("lower")), json_vector(s.at("upper"))), count});
        }
        return {std::move(domain), std::move(strata)};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad stratification JSON: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::invalid_argument("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace stratarium
