/* C interface to the encov core. All functions are thread-compatible:
 * distinct reports may be used from distinct threads, but a single
 * report must not be shared without external synchronization. */
#ifndef ENCOV_H
#define ENCOV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum encov_status {
  ENCOV_OK = 0,
  /* the command ran and at least one asserted check failed */
  ENCOV_CHECK_FAILED = 1,
  ENCOV_USAGE = 2,
  ENCOV_PARSE = 3,
  ENCOV_UNRESOLVED = 4,
  ENCOV_STRUCTURE = 5,
  /* a search cap was exceeded; results are reported as not checked */
  ENCOV_CAP_EXCEEDED = 6,
  ENCOV_PRECONDITION = 7,
  ENCOV_INTERNAL = 8,
  ENCOV_BAD_ARGUMENT = 9
} encov_status;

/* Opaque handle for the rendered result of one command run. */
typedef struct encov_report encov_report;

/* Runs one subcommand. argv holds argc tokens, the same ones the CLI
 * would receive after the program name (e.g. "validate", "file.enc",
 * "--format", "machine"). Whenever the command ran to completion a
 * report is stored in *out (status ENCOV_OK, ENCOV_CHECK_FAILED, or
 * ENCOV_CAP_EXCEEDED with partial results) and must be released with
 * encov_report_free. When the run aborted, *out is NULL and the error
 * text is available via encov_last_error; test *out, not the status,
 * to tell the two apart. */
encov_status encov_run(int argc, const char* const* argv, encov_report** out);

/* Rendered report text, NUL terminated, owned by the report. */
const char* encov_report_text(const encov_report* rep);

/* Process exit code the CLI would use for this report: 0, 1 or 6. */
int encov_report_exit_code(const encov_report* rep);

void encov_report_free(encov_report* rep);

/* Message of the most recent failing encov_run on this thread, or ""
 * if the last call succeeded. The buffer is thread-local and is
 * overwritten by the next call. */
const char* encov_last_error(void);

const char* encov_status_name(encov_status s);

/* Bumped whenever the binary interface changes. */
int encov_abi_version(void);

#ifdef __cplusplus
}
#endif

#endif /* ENCOV_H */
