#include "kcc/report.hpp"

#include "kcc/format.hpp"

namespace kcc {

const char* const kReportHeader =
    "step,op,id,recourse,size_S,level,radius,cost,rstar,ratio,"
    "n_regular,n_extended,n_zombie,invariants_ok";

ReportWriter::ReportWriter(std::ostream& os) : os_(os) { os_ << kReportHeader << "\n"; }

void ReportWriter::row(const StepReport& r) {
    os_ << r.step << ',' << r.op << ',' << r.id << ',' << r.recourse << ',' << r.size_S << ',';
    if (r.has_level) os_ << r.level;
    os_ << ',';
    if (r.has_radius) os_ << fmt_g(r.radius);
    os_ << ',';
    if (r.has_cost) os_ << fmt_g(r.cost);
    os_ << ',';
    if (r.has_rstar) os_ << fmt_g(r.rstar);
    os_ << ',';
    if (r.has_ratio) os_ << fmt_g(r.ratio);
    os_ << ',' << r.n_regular << ',' << r.n_extended << ',' << r.n_zombie << ','
        << (r.invariants_ok ? "true" : "false") << "\n";
}

}  // namespace kcc
