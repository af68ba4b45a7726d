#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mrlab/besov.hpp"
#include "mrlab/interpnorms.hpp"
#include "mrlab/mrtest.hpp"
#include "mrlab/weightlab.hpp"

namespace mrlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "mrlab/1";

// Non-finite numbers become null.
Json number(double v);

Json to_json(const QuadratureSpec& q);
Json to_json(const Growth& g);
Json to_json(const ConditionReport& r);
Json to_json(const SeminormReport& r);
Json to_json(const BesovReport& r);
Json to_json(const ThermicReport& r);
Json to_json(const MRReport& r);

struct Claim {
    std::string name;
    double expected = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    std::string note;

    double rel_error() const;
    bool pass() const;
};
Json to_json(const Claim& c);

// Adds the schema key in front and writes with a trailing newline.
void write_json(const std::string& path, const Json& body);
void write_curve_csv(const std::string& path, const std::vector<double>& t, const std::vector<double>& values,
                     const std::string& header = "t,value");

}  // namespace mrlab
