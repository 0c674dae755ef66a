#pragma once

#include "hc/check.hpp"
#include "hc/formats.hpp"
#include "hc/intermediate.hpp"
#include "hc/signature.hpp"

#include <string>
#include <vector>

namespace hc {

enum class OutputFormat { human, structured };

/// One value per degree.
struct Series {
    std::string name;
    std::vector<std::string> values;
};

/// Ordered key/value entries plus per-degree tables. The structured form is
/// "key value" lines after the header "hcx-report 1", tables flattened to
/// "table.column v0 v1 ..."; the human form aligns keys and prints tables by degree.
class Report {
public:
    explicit Report(std::string command);

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, long value);
    void flag(const std::string& key, bool value);
    void table(const std::string& name, std::vector<Series> columns);
    void matrix(const std::string& key, const Mat& m);

    std::string render(OutputFormat format) const;

private:
    struct Table {
        std::string name;
        std::vector<Series> columns;
    };
    std::string command_;
    std::vector<std::pair<std::string, std::string>> entries_;
    std::vector<Table> tables_;
    std::vector<int> order_;   // >= 0: entry index, < 0: table -(index+1)
};

Report complex_report(const FiniteComplex& c);
Report pair_report(const PairFile& p);
Report intermediate_report(const ComplexPair& p);
Report ih_report(const StratifiedComplex& x, const Perversity& p, const std::optional<Perversity>& q);
Report signature_report(const StratifiedComplex& x, const Perversity& p, int flip);
Report check_report(const CheckSuite& suite);

}  // namespace hc
