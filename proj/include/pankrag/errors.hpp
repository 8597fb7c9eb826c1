#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pankrag {

/// Failure categories carried by every engine exception; the CLI maps them
/// to stable exit codes.
enum class ErrorKind {
  Config,
  Input,
  Transport,
  Extraction,
  Planning,
  Sequencing,
  Retrieval,
  Generation,
  Integrity,
  Corruption,
  VersionMismatch,
  Store,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  static Error config(std::string m) { return {ErrorKind::Config, std::move(m)}; }
  static Error input(std::string m) { return {ErrorKind::Input, std::move(m)}; }
  static Error transport(std::string m) { return {ErrorKind::Transport, std::move(m)}; }
  static Error extraction(std::string m) { return {ErrorKind::Extraction, std::move(m)}; }
  static Error planning(std::string m) { return {ErrorKind::Planning, std::move(m)}; }
  static Error sequencing(std::string m) { return {ErrorKind::Sequencing, std::move(m)}; }
  static Error retrieval(std::string m) { return {ErrorKind::Retrieval, std::move(m)}; }
  static Error generation(std::string m) { return {ErrorKind::Generation, std::move(m)}; }
  static Error integrity(std::string m) { return {ErrorKind::Integrity, std::move(m)}; }
  static Error corruption(std::string m) { return {ErrorKind::Corruption, std::move(m)}; }
  static Error version_mismatch(std::string m) { return {ErrorKind::VersionMismatch, std::move(m)}; }
  static Error store(std::string m) { return {ErrorKind::Store, std::move(m)}; }

 private:
  ErrorKind kind_;
};

}  // namespace pankrag
