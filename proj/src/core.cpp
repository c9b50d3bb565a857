#include "mseg/core.hpp"

#include <algorithm>

namespace mseg {

const char* errc_name(errc code) {
    switch (code) {
        case errc::dangling_partner: return "DanglingPartner";
        case errc::asymmetric_partner: return "AsymmetricPartner";
        case errc::sign_on_paired_line: return "SignOnPairedLine";
        case errc::missing_sign_on_self_dual_line: return "MissingSignOnSelfDualLine";
        case errc::degree_mismatch: return "DegreeMismatch";
        case errc::invalid_s_matrix: return "InvalidSMatrix";
        case errc::partition_mismatch: return "PartitionMismatch";
        case errc::odd_total_degree: return "OddTotalDegree";
        case errc::odd_dimension: return "OddDimension";
        case errc::not_generic: return "NotGeneric";
        case errc::not_conjugate_self_dual: return "NotConjugateSelfDual";
        case errc::condition_a_fails: return "ConditionAFails";
        case errc::instance_too_large: return "InstanceTooLarge";
        case errc::syntax_error: return "SyntaxError";
        case errc::duplicate_name: return "DuplicateName";
        case errc::dangling_line: return "DanglingLine";
        case errc::unknown_binding: return "UnknownBinding";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::io_error: return "IoError";
        case errc::case_coverage_failure: return "CaseCoverageFailure";
        case errc::cross_check_failure: return "CrossCheckFailure";
    }
    return "UnknownError";
}

bool errc_is_internal(errc code) {
    return code == errc::case_coverage_failure || code == errc::cross_check_failure;
}

void LineTable::add(CuspidalLine line) {
    auto [it, inserted] = lines_.emplace(line.name, std::move(line));
    if (!inserted) fail(errc::duplicate_name, "line '" + it->first + "' declared twice");
}

bool LineTable::contains(std::string_view name) const {
    return lines_.find(name) != lines_.end();
}

const CuspidalLine& LineTable::at(std::string_view name) const {
    auto it = lines_.find(name);
    if (it == lines_.end()) fail(errc::dangling_line, "undeclared line '" + std::string(name) + "'");
    return it->second;
}

void validate_line_table(const LineTable& table) {
    for (const auto& [name, line] : table.lines()) {
        if (line.degree < 1)
            fail(errc::degree_mismatch, "line '" + name + "' has non-positive degree");
        if (!table.contains(line.sigma_partner))
            fail(errc::dangling_partner,
                 "line '" + name + "' names undeclared partner '" + line.sigma_partner + "'");
        const CuspidalLine& partner = table.at(line.sigma_partner);
        if (partner.sigma_partner != name)
            fail(errc::asymmetric_partner,
                 "partner of '" + name + "' is '" + line.sigma_partner + "' but partner of '" +
                     line.sigma_partner + "' is '" + partner.sigma_partner + "'");
        if (partner.degree != line.degree)
            fail(errc::degree_mismatch, "partnered lines '" + name + "' and '" +
                                            line.sigma_partner + "' have different degrees");
        if (line.self_dual()) {
            if (!line.self_sign)
                fail(errc::missing_sign_on_self_dual_line,
                     "self-dual line '" + name + "' carries no sign");
            if (*line.self_sign != 1 && *line.self_sign != -1)
                fail(errc::missing_sign_on_self_dual_line,
                     "line '" + name + "' has sign outside {+1, -1}");
        } else if (line.self_sign) {
            fail(errc::sign_on_paired_line,
                 "line '" + name + "' is partnered with '" + line.sigma_partner +
                     "' and must not carry a sign");
        }
    }
}

Segment st(std::int64_t length, std::string line, HalfInt exponent) {
    return Segment{Cuspidal{std::move(line), exponent}, length};
}

std::int64_t Multisegment::total_degree() const {
    std::int64_t n = 0;
    for (const Segment& seg : segments) n += seg.ambient_degree(table);
    return n;
}

void validate_multisegment(const Multisegment& pi) {
    validate_line_table(pi.table);
    for (const Segment& seg : pi.segments) {
        pi.table.at(seg.line());  // throws dangling_line
        if (seg.length < 1)
            fail(errc::invalid_argument, "segment on line '" + seg.line() + "' has non-positive length");
    }
}

Segment sigma(const Segment& seg, const LineTable& table) {
    const CuspidalLine& line = table.at(seg.line());
    return Segment{Cuspidal{line.sigma_partner, -seg.exponent()}, seg.length};
}

Multisegment sigma(const Multisegment& pi) {
    Multisegment out{pi.table, {}};
    out.segments.reserve(pi.segments.size());
    for (const Segment& seg : pi.segments) out.segments.push_back(sigma(seg, pi.table));
    return out;
}

bool is_isomorphic(const Segment& a, const Segment& b) { return a == b; }

bool is_conjugate_self_dual(const Segment& seg, const LineTable& table) {
    return sigma(seg, table) == seg;
}

std::optional<int> segment_sign(const Segment& seg, const LineTable& table) {
    const CuspidalLine& line = table.at(seg.line());
    if (!line.self_dual() || seg.exponent() != HalfInt(0)) return std::nullopt;
    const int base = line.self_sign.value();
    return seg.length % 2 != 0 ? base : -base;
}

std::vector<Segment> langlands_sort(const Multisegment& pi) {
    std::vector<Segment> out = pi.segments;
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
        if (a.central_slope() != b.central_slope()) return a.central_slope() > b.central_slope();
        if (a.line() != b.line()) return a.line() < b.line();
        if (a.length != b.length) return a.length > b.length;
        return a.exponent() < b.exponent();
    });
    return out;
}

}  // namespace mseg
