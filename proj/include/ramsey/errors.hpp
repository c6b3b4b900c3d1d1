#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violation carrying a vertex-set witness (e.g. an independent
// set of forbidden size discovered en route).
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& msg, std::vector<int> witness = {})
        : Error(msg), witness_(std::move(witness))
    {
    }

    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

// The requested order exceeds the open-search cap.
class CapError : public Error {
public:
    using Error::Error;
};

// Failure of a named pipeline step; the message carries the state snapshot.
class StepError : public Error {
public:
    StepError(std::string step, const std::string& msg)
        : Error(step + ": " + msg), step_(std::move(step))
    {
    }

    const std::string& step() const { return step_; }

private:
    std::string step_;
};

} // namespace ramsey
