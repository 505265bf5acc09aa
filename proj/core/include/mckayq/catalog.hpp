#pragma once

#include "mckayq/pipeline.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mckayq {

class UnknownEntry : public std::runtime_error {
public:
    explicit UnknownEntry(std::string const& name)
        : std::runtime_error("unknown catalog entry \"" + name + "\"") {}
};

/* Regression fragment: fields left unset are not compared. */
struct ExpectedFragment {
    std::string dynkin;       // DynkinType::name()
    std::string class_group;  // ClassGroup::describe()
    std::optional<bool> gorenstein;
    std::optional<bool> isolated;
    int vertices = -1;
    long group_order = -1;
    long kernel_order = -1;
    bool surrogate = false;   // C/R replaced by a cyclotomic field over its real subfield
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    JobSpec job;
    ExpectedFragment expected;
};

std::vector<CatalogEntry> const& catalog();
CatalogEntry const& catalog_entry(std::string const& name);

/* Human-readable mismatches between a report and an expected fragment (empty = match). */
std::vector<std::string> compare_expected(Report const& r, ExpectedFragment const& e);

}  // namespace mckayq
