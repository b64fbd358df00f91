#include "bhdeco/fixtures.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <system_error>

namespace bhdeco {

namespace {

std::string shortest(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view s, int line_no) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::runtime_error("fixture line " + std::to_string(line_no) +
                                 ": bad number '" + std::string(s) + "'");
    }
    return v;
}

void check_field(const std::string& s, const char* what) {
    if (s.find_first_of("\t\n\r") != std::string::npos) {
        throw std::invalid_argument(std::string("fixture ") + what +
                                    " must not contain tabs or newlines");
    }
}

}  // namespace

void write_fixtures(std::ostream& out, const std::vector<FixtureRecord>& records) {
    out << "# name\tvalue\trel_tol\tparams\n";
    for (const FixtureRecord& r : records) {
        check_field(r.name, "name");
        check_field(r.params, "params");
        if (r.name.empty() || r.name.front() == '#') {
            throw std::invalid_argument("fixture name must be non-empty and not start with '#'");
        }
        out << r.name << '\t' << shortest(r.value) << '\t' << shortest(r.rel_tol) << '\t'
            << r.params << '\n';
    }
}

std::vector<FixtureRecord> read_fixtures(std::istream& in) {
    std::vector<FixtureRecord> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::array<std::string_view, 4> fields{};
        std::string_view rest = line;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto tab = rest.find('\t');
            if (tab == std::string_view::npos) {
                throw std::runtime_error("fixture line " + std::to_string(line_no) +
                                         ": expected 4 tab-separated fields");
            }
            fields[i] = rest.substr(0, tab);
            rest.remove_prefix(tab + 1);
        }
        fields[3] = rest;
        FixtureRecord r;
        r.name = std::string(fields[0]);
        r.value = parse_double(fields[1], line_no);
        r.rel_tol = parse_double(fields[2], line_no);
        r.params = std::string(fields[3]);
        out.push_back(std::move(r));
    }
    return out;
}

std::map<std::string, FixtureRecord> load_fixture_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open fixture file " + path.string());
    }
    std::map<std::string, FixtureRecord> out;
    for (FixtureRecord& r : read_fixtures(in)) {
        const std::string name = r.name;
        if (!out.emplace(name, std::move(r)).second) {
            throw std::runtime_error("duplicate fixture " + name);
        }
    }
    return out;
}

}  // namespace bhdeco
