#pragma once

#include <stdexcept>
#include <string>

namespace focal {

/// Base class for all library errors.
struct FocalError : std::runtime_error {
    explicit FocalError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidCartanType : FocalError {
    explicit InvalidCartanType(const std::string& what) : FocalError(what) {}
};

struct DimensionMismatch : FocalError {
    explicit DimensionMismatch(const std::string& what) : FocalError(what) {}
};

struct ZeroRoot : FocalError {
    explicit ZeroRoot(const std::string& what) : FocalError(what) {}
};

struct WrongLength : FocalError {
    explicit WrongLength(const std::string& what) : FocalError(what) {}
};

struct ZeroWeight : FocalError {
    explicit ZeroWeight(const std::string& what) : FocalError(what) {}
};

struct DegreeCapExceeded : FocalError {
    explicit DegreeCapExceeded(const std::string& what) : FocalError(what) {}
};

struct ZeroTangent : FocalError {
    explicit ZeroTangent(const std::string& what) : FocalError(what) {}
};

struct InfeasibleR : FocalError {
    explicit InfeasibleR(const std::string& what) : FocalError(what) {}
};

struct IndexMismatch : FocalError {
    explicit IndexMismatch(const std::string& what) : FocalError(what) {}
};

struct NotClassical : FocalError {
    explicit NotClassical(const std::string& what) : FocalError(what) {}
};

} // namespace focal
