#pragma once

#include <cstdlib>
#include <string>

#include "epgap/core/error.hpp"

namespace epgap {

/// Size guards for the exponential searches. Every exact routine checks its guard before
/// starting and throws SizeLimitError when the input is too large.
struct Limits {
  int minor_pattern = 10;
  int minor_host = 24;
  int treewidth = 20;
  int pathwidth = 16;
  int contraction_degeneracy = 12;
  int pack_host = 18;
  int pack_host_triangle = 40;
  int find_mesh_host = 12;
  int find_mesh_order = 6;
  int find_mesh_connectivity = 3;
  int verify_mesh_order = 10;
  int verify_mesh_connectivity = 3;
  int model_enumeration = 100000;

  /// Defaults overridden by EPGAP_LIMIT_<NAME> environment variables
  /// (e.g. EPGAP_LIMIT_MINOR_HOST=30).
  static Limits from_env() {
    Limits l;
    read("EPGAP_LIMIT_MINOR_PATTERN", l.minor_pattern);
    read("EPGAP_LIMIT_MINOR_HOST", l.minor_host);
    read("EPGAP_LIMIT_TREEWIDTH", l.treewidth);
    read("EPGAP_LIMIT_PATHWIDTH", l.pathwidth);
    read("EPGAP_LIMIT_CONTRACTION_DEGENERACY", l.contraction_degeneracy);
    read("EPGAP_LIMIT_PACK_HOST", l.pack_host);
    read("EPGAP_LIMIT_PACK_HOST_TRIANGLE", l.pack_host_triangle);
    read("EPGAP_LIMIT_FIND_MESH_HOST", l.find_mesh_host);
    read("EPGAP_LIMIT_FIND_MESH_ORDER", l.find_mesh_order);
    read("EPGAP_LIMIT_FIND_MESH_CONNECTIVITY", l.find_mesh_connectivity);
    read("EPGAP_LIMIT_VERIFY_MESH_ORDER", l.verify_mesh_order);
    read("EPGAP_LIMIT_VERIFY_MESH_CONNECTIVITY", l.verify_mesh_connectivity);
    read("EPGAP_LIMIT_MODEL_ENUMERATION", l.model_enumeration);
    return l;
  }

 private:
  static void read(const char* name, int& slot) {
    if (const char* raw = std::getenv(name)) {
      char* end = nullptr;
      const long v = std::strtol(raw, &end, 10);
      if (end == raw || *end != '\0' || v <= 0) {
        throw ParameterError(std::string("bad value for ") + name + ": " + raw);
      }
      slot = static_cast<int>(v);
    }
  }
};

inline void require_size(int actual, int limit, const char* what) {
  if (actual > limit) {
    throw SizeLimitError(std::string(what) + ": size " + std::to_string(actual) + " exceeds limit " +
                         std::to_string(limit));
  }
}

}  // namespace epgap
