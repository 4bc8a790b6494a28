#include "dgcy/dgcy.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "dgcy/commands.hpp"
#include "dgcy/document.hpp"
#include "dgcy/errors.hpp"
#include "dgcy/version.hpp"

struct dgcy_session {
  std::optional<dgcy::InputDocument> doc;
  std::string output;
  std::string error;
  std::string error_kind;
  std::string document_json;
};

namespace {

template <class F>
dgcy_status guarded(dgcy_session* s, F&& body) {
  if (!s) return DGCY_INPUT_ERROR;
  s->output.clear();
  s->error.clear();
  s->error_kind.clear();
  try {
    body();
    return DGCY_OK;
  } catch (const dgcy::Error& e) {
    s->error = e.what();
    s->error_kind = e.kind();
    return static_cast<dgcy_status>(static_cast<int>(e.error_class()));
  } catch (const std::bad_alloc&) {
    s->error = "out of memory";
    s->error_kind = "ResourceError";
  } catch (const std::exception& e) {
    s->error = e.what();
    s->error_kind = "InternalError";
  }
  return DGCY_INTERNAL_ERROR;
}

}  // namespace

extern "C" {

const char* dgcy_version(void) { return DGCY_VERSION; }

void dgcy_options_init(dgcy_options* opts) {
  if (!opts) return;
  opts->max_degree = 8;
  opts->format = DGCY_FORMAT_JSON;
  opts->seed = 0;
}

dgcy_session* dgcy_session_new(void) {
  try {
    return new dgcy_session();
  } catch (...) {
    return nullptr;
  }
}

void dgcy_session_free(dgcy_session* s) { delete s; }

dgcy_status dgcy_load_document(dgcy_session* s, const char* json_text) {
  return guarded(s, [&] {
    if (!json_text) throw dgcy::SchemaError("document text is null");
    s->doc = dgcy::parse_input(json_text);
  });
}

dgcy_status dgcy_load_file(dgcy_session* s, const char* path) {
  return guarded(s, [&] {
    if (!path) throw dgcy::SchemaError("path is null");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw dgcy::SchemaError(std::string("cannot read '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    s->doc = dgcy::parse_input(buf.str());
  });
}

dgcy_status dgcy_run(dgcy_session* s, const char* command, const dgcy_options* opts) {
  return guarded(s, [&] {
    if (!s->doc) throw dgcy::SchemaError("no document loaded");
    if (!command) throw dgcy::SchemaError("command is null");
    dgcy::RunOptions ro;
    if (opts) {
      ro.max_degree = opts->max_degree;
      ro.format = opts->format == DGCY_FORMAT_TEXT ? dgcy::OutputFormat::Text : dgcy::OutputFormat::Json;
      ro.seed = opts->seed;
    }
    s->output = dgcy::run_command(command, *s->doc, ro);
  });
}

const char* dgcy_last_output(const dgcy_session* s) { return s ? s->output.c_str() : ""; }
const char* dgcy_last_error(const dgcy_session* s) { return s ? s->error.c_str() : ""; }
const char* dgcy_last_error_kind(const dgcy_session* s) { return s ? s->error_kind.c_str() : ""; }

const char* dgcy_document_json(dgcy_session* s) {
  if (!s || !s->doc) return nullptr;
  s->document_json = dgcy::serialize(*s->doc);
  return s->document_json.c_str();
}

}  // extern "C"
