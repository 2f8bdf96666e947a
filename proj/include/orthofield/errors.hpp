#pragma once

#include <stdexcept>
#include <string>

namespace orthofield {

// Base class for every error raised by the library. `kind()` is a stable
// identifier used in CLI diagnostic records.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& message) : Error("InvalidParameter", message) {}
};

class NonPositiveMoment : public Error {
public:
    NonPositiveMoment(int index, const std::string& value)
        : Error("NonPositiveMoment",
                "radial moment m_" + std::to_string(index) + " = " + value + " is not positive"),
          index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

class NotNormalized : public Error {
public:
    explicit NotNormalized(const std::string& value)
        : Error("NotNormalized", "m_0 = " + value + " but a probability measure needs m_0 = 1") {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& message) : Error("OutOfRange", message) {}
};

// First Hankel sector `sector` (d = |k - l|) whose leading block of order
// `size` is not positive definite.
class DegenerateMeasure : public Error {
public:
    DegenerateMeasure(int sector, int size)
        : Error("DegenerateMeasure", "DegenerateMeasure(" + std::to_string(sector) + "," +
                                         std::to_string(size) + "): Hankel block of sector " +
                                         std::to_string(sector) + " and size " +
                                         std::to_string(size) + " is not positive definite"),
          sector_(sector), size_(size) {}

    int sector() const noexcept { return sector_; }
    int size() const noexcept { return size_; }

private:
    int sector_;
    int size_;
};

class NotAProbability : public Error {
public:
    explicit NotAProbability(double mass)
        : Error("NotAProbability",
                "quadrature mass " + std::to_string(mass) + " deviates from 1") {}
};

class RecurrenceViolation : public Error {
public:
    RecurrenceViolation(int k, int l, const std::string& detail)
        : Error("RecurrenceViolation", "recurrence violated at (" + std::to_string(k) + "," +
                                           std::to_string(l) + "): " + detail),
          k_(k), l_(l) {}
    int k() const noexcept { return k_; }
    int l() const noexcept { return l_; }

private:
    int k_;
    int l_;
};

class MissingAlpha : public Error {
public:
    MissingAlpha(int k, int l)
        : Error("MissingAlpha", "alpha table has no entry (" + std::to_string(k) + "," +
                                    std::to_string(l) + ")"),
          k_(k), l_(l) {}
    int k() const noexcept { return k_; }
    int l() const noexcept { return l_; }

private:
    int k_;
    int l_;
};

class CutoffTooSmall : public Error {
public:
    explicit CutoffTooSmall(const std::string& message) : Error("CutoffTooSmall", message) {}
};

class IncompleteTable : public Error {
public:
    explicit IncompleteTable(const std::string& message) : Error("IncompleteTable", message) {}
};

class NonPositiveEntry : public Error {
public:
    NonPositiveEntry(int k, int l)
        : Error("NonPositiveEntry", "alpha(" + std::to_string(k) + "," + std::to_string(l) +
                                        ") is not positive") {}
};

// An exact operation left the representable number field (for example the
// square root of an irrational surd).
class InexactOperation : public Error {
public:
    explicit InexactOperation(const std::string& message) : Error("InexactOperation", message) {}
};

}  // namespace orthofield
