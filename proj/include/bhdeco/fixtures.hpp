#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace bhdeco {

/// One frozen regression constant together with how it was produced.
struct FixtureRecord {
    std::string name;
    double value = 0.0;
    double rel_tol = 0.0;
    std::string params;  ///< free text, no tabs or newlines
};

/// Tab-separated text, one record per line:
///
///     name <TAB> value <TAB> rel_tol <TAB> params
///
/// Lines starting with '#' and blank lines are ignored. Doubles are written in
/// shortest round-trip form, so write -> read reproduces every bit.
void write_fixtures(std::ostream& out, const std::vector<FixtureRecord>& records);
std::vector<FixtureRecord> read_fixtures(std::istream& in);

/// Loads a fixture file keyed by record name. Throws std::runtime_error on I/O
/// or parse failure, including duplicate names.
std::map<std::string, FixtureRecord> load_fixture_file(const std::filesystem::path& path);

}  // namespace bhdeco
