/* Thin launcher over the shared library; everything it knows about the
 * core goes through the C interface. */
#include <stdio.h>

#include "encov/encov.h"

int main(int argc, char** argv) {
  encov_report* rep = NULL;
  const encov_status st =
      encov_run(argc - 1, (const char* const*)(argv + 1), &rep);
  if (rep != NULL) {
    fputs(encov_report_text(rep), stdout);
    const int code = encov_report_exit_code(rep);
    encov_report_free(rep);
    return code;
  }
  fprintf(stderr, "encov: %s: %s\n", encov_status_name(st), encov_last_error());
  return (int)st;
}
