#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "appell/identity.hpp"

namespace appell {

/// CSV with a fixed column set. The parameters field is always quoted since
/// it routinely contains commas.
inline void write_csv_header(std::ostream& os) {
    os << "identity,m,n,parameters,lhs,rhs,equal,micros\n";
}

inline void write_csv_row(std::ostream& os, const VerificationReport& r) {
    os << r.identity << ',' << r.m << ',' << r.n << ",\"" << r.parameters << "\","
       << r.lhs.str() << ',' << r.rhs.str() << ',' << (r.equal ? "true" : "false") << ','
       << r.micros << '\n';
}

/// One JSON object per line, same fields as the CSV.
inline void write_jsonl_row(std::ostream& os, const VerificationReport& r) {
    nlohmann::json j{
        {"identity", r.identity},
        {"m", r.m},
        {"n", r.n},
        {"parameters", r.parameters},
        {"lhs", r.lhs.str()},
        {"rhs", r.rhs.str()},
        {"equal", r.equal},
        {"micros", r.micros},
    };
    os << j.dump() << '\n';
}

}  // namespace appell
