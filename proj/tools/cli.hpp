#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lowdeg/cohomology.hpp"
#include "lowdeg/secants.hpp"

namespace lowdeg::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 verification failure, 2 usage or format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class RowStatus { pass, fail, skipped };
std::string to_string(RowStatus s);

struct Table1Row {
    int k = 0;
    int g = 0;
    /// d - c.
    int e = 0;
    long long h1_1 = 0;
    long long h1_2 = 0;
    /// "multisecant", "scroll" or the reason the row is skipped.
    std::string recipe;
    RowStatus status = RowStatus::skipped;
    long long got_1 = -1;
    long long got_2 = -1;
    std::string detail;
};

/// Rows (g, d, h1(I(1)), h1(I(2))) for k = 3..7 with their witness recipes.
std::vector<Table1Row> table1_rows();
/// Builds each implementable witness and compares its h1 pair.
std::vector<Table1Row> table1_report(int c, const Field& f, std::uint64_t seed);

struct Table2Case {
    std::string name;
    Table2Row row;
    ZakInvariants zak;
    Table2Comparison cmp;
};

/// Twisted cubic, RNC(4), S(1,2), Veronese surface, projected quartic and quintic, over Q.
std::vector<Table2Case> table2_report(int trials, std::uint64_t seed, bool confirm);

}  // namespace lowdeg::cli
