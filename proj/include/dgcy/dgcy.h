/* C interface to the dgcy engine. */
#ifndef DGCY_H
#define DGCY_H

#include <stdint.h>

#if defined(_WIN32)
#define DGCY_API __declspec(dllexport)
#else
#define DGCY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dgcy_session dgcy_session;

/* Status codes double as process exit codes. */
typedef enum {
  DGCY_OK = 0,
  DGCY_INPUT_ERROR = 1,
  DGCY_WINDOW_EXCEEDED = 2,
  DGCY_INTERNAL_ERROR = 3
} dgcy_status;

typedef enum { DGCY_FORMAT_JSON = 0, DGCY_FORMAT_TEXT = 1 } dgcy_format;

typedef struct {
  int max_degree;
  dgcy_format format;
  uint64_t seed;
} dgcy_options;

DGCY_API const char* dgcy_version(void);
DGCY_API void dgcy_options_init(dgcy_options* opts);

DGCY_API dgcy_session* dgcy_session_new(void);
DGCY_API void dgcy_session_free(dgcy_session* s);

DGCY_API dgcy_status dgcy_load_document(dgcy_session* s, const char* json_text);
DGCY_API dgcy_status dgcy_load_file(dgcy_session* s, const char* path);

/* command: cohomology, resolve, ext, frobenius or classify. opts may be NULL. */
DGCY_API dgcy_status dgcy_run(dgcy_session* s, const char* command, const dgcy_options* opts);

/* Strings stay valid until the next call on the same session. */
DGCY_API const char* dgcy_last_output(const dgcy_session* s);
DGCY_API const char* dgcy_last_error(const dgcy_session* s);
DGCY_API const char* dgcy_last_error_kind(const dgcy_session* s);
/* Normalized JSON of the loaded document, or NULL. */
DGCY_API const char* dgcy_document_json(dgcy_session* s);

#ifdef __cplusplus
}
#endif

#endif
