#pragma once

#include <stdexcept>
#include <string>

namespace dbp {

struct DegenerateCharge : std::domain_error {
    explicit DegenerateCharge(const std::string& what) : std::domain_error(what) {}
};

struct HorizonOrder : std::domain_error {
    explicit HorizonOrder(const std::string& what) : std::domain_error(what) {}
};

struct NegativeCoupling : std::domain_error {
    explicit NegativeCoupling(const std::string& what) : std::domain_error(what) {}
};

struct HorizonDomain : std::domain_error {
    explicit HorizonDomain(const std::string& what) : std::domain_error(what) {}
};

struct IndexRange : std::out_of_range {
    explicit IndexRange(const std::string& what) : std::out_of_range(what) {}
};

struct OrderOverflow : std::length_error {
    explicit OrderOverflow(const std::string& what) : std::length_error(what) {}
};

struct SingularPrincipalPart : std::runtime_error {
    explicit SingularPrincipalPart(const std::string& what) : std::runtime_error(what) {}
};

struct StepFailure : std::runtime_error {
    explicit StepFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dbp
