#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace termweave {

/// Syntax error raised by the aterm, pattern, rule-file and config readers.
/// Carries the 1-based source position the reader stopped at.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Base class for semantic failures inside the inference pipeline.
class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Keep edit operation without a partner on the other side
/// (weave table rows 8 and 9).
class WeaveError : public PipelineError {
public:
    using PipelineError::PipelineError;
};

/// A hole that is not dominated by any context label.
class ContextError : public PipelineError {
public:
    using PipelineError::PipelineError;
};

/// The same constructor observed with two different arities.
class SignatureError : public PipelineError {
public:
    using PipelineError::PipelineError;
};

/// Invalid rewrite rule: right-hand metavariable absent from the left side,
/// unbound metavariable at instantiation time, or a wildcard where none is
/// permitted.
class RuleError : public PipelineError {
public:
    using PipelineError::PipelineError;
};

/// Innermost rewriting exceeded its step budget.
class StepLimitError : public PipelineError {
public:
    using PipelineError::PipelineError;
};

}  // namespace termweave
