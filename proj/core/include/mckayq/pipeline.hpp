#pragma once

#include "mckayq/arquiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mckayq {

class JobParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SmallnessViolation : public std::runtime_error {
public:
    SmallnessViolation(std::string const& msg, std::string element)
        : std::runtime_error(msg), element(std::move(element)) {}
    std::string element;
};

struct GeneratorSpec {
    std::string name;
    std::vector<std::vector<std::string>> matrix;  // row-major entry expressions
    long aut = 1;
};

struct JobSpec {
    std::string name;
    FieldSpec field;
    std::vector<long> galois;  // generators of Gal(l/k)
    int d = 2;
    std::vector<GeneratorSpec> generators;
    std::size_t cap = 100000;
    SkewOptions skew;
};

JobSpec parse_job(std::string const& json_text);
std::string job_to_json(JobSpec const& job);

FieldPtr make_field(FieldSpec const& spec);
std::vector<GroupElement> parse_generators(Field const& f, JobSpec const& job);

struct Report {
    JobSpec job;
    FieldPtr field;
    std::optional<FiniteGroup> group;
    std::optional<Kernel> kernel;
    bool small = true;
    bool gorenstein = false;
    bool isolated = false;
    std::optional<CharacterTable> table;
    std::optional<SkewData> skew;
    std::optional<ValuedQuiver> quiver_h;
    std::optional<ValuedQuiver> quiver;
    std::vector<AlmostSplitSequence> sequences;
    std::optional<ClassGroup> class_group;
    DynkinType dynkin;

    bool ambiguous() const { return skew && skew->ambiguous(); }
};

/* Field, group, characters, orbits, quiver, sequences, class group, type. Stops after the
 * orbit table when some a stays ambiguous. */
Report analyze(JobSpec const& job);

std::string report_json(Report const& r);
std::string explain_text(Report const& r);

}  // namespace mckayq
