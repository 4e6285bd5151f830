#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace illusion {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NodeNotFound : public Error {
 public:
  explicit NodeNotFound(const std::string& id)
      : Error("unknown node '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Malformed graph construction: duplicate node, self-loop, duplicate edge.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidEdit : public Error {
 public:
  InvalidEdit(const std::string& u, const std::string& v, const std::string& why)
      : Error("invalid edit {" + u + ", " + v + "}: " + why), u_(u), v_(v) {}
  const std::string& u() const { return u_; }
  const std::string& v() const { return v_; }

 private:
  std::string u_, v_;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class InfeasibleInstance : public Error {
 public:
  InfeasibleInstance(const std::string& node, const std::string& why)
      : Error("infeasible instance at node '" + node + "': " + why), node_(node) {}
  const std::string& node() const { return node_; }

 private:
  std::string node_;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class InvalidAssignment : public Error {
 public:
  using Error::Error;
};

class WitnessMappingIncomplete : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnknownNode : public Error {
 public:
  UnknownNode(std::size_t line, const std::string& id)
      : Error("line " + std::to_string(line) + ": undeclared node '" + id + "'"),
        line_(line),
        id_(id) {}
  std::size_t line() const { return line_; }
  const std::string& id() const { return id_; }

 private:
  std::size_t line_;
  std::string id_;
};

}  // namespace illusion
