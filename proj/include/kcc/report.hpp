#pragma once

#include <cstddef>
#include <ostream>
#include <string>

namespace kcc {

struct StepReport {
    long step = 0;
    char op = 'I';
    std::string id;
    int recourse = 0;
    std::size_t size_S = 0;
    bool has_level = false;
    long level = 0;
    bool has_radius = false;
    double radius = 0.0;
    bool has_cost = false;
    double cost = 0.0;
    bool has_rstar = false;
    double rstar = 0.0;
    bool has_ratio = false;
    double ratio = 0.0;
    std::size_t n_regular = 0;
    std::size_t n_extended = 0;
    std::size_t n_zombie = 0;
    bool invariants_ok = true;
};

extern const char* const kReportHeader;

class ReportWriter {
  public:
    explicit ReportWriter(std::ostream& os);
    void row(const StepReport& r);

  private:
    std::ostream& os_;
};

}  // namespace kcc
