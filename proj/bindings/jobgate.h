/* jobgate.h: generated by jobgate-bindgen, do not edit. */
#ifndef JOBGATE_H
#define JOBGATE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * library jobgate, version 1.0.0 released 2026-10-14
 *
 * A job code is a service base plus a stage:
 *   stage 0  initialize   copy data[0..size) into the service input
 *   stage 1  compute      run the service on the stored input
 *   stage 2  retrieve     copy the stored output into data[0..size)
 *   stage 3  output size  write the output length into data[0]
 *
 * Status codes:
 *   0  success
 *   1  unknown job
 *   2  stage-order violation
 *   3  buffer too small
 *   4  malformed payload
 *   5  gate not initialized
 *   6  computation failure
 */

/*
 * service swap
 *   base 0, stages 4
 *   job 0  initialize
 *   job 1  compute
 *   job 2  retrieve
 *   job 3  output size
 */

/*
 * service version
 *   base 40, stages 4
 *   job 40  initialize
 *   job 41  compute
 *   job 42  retrieve
 *   job 43  output size
 */

/*
 * service polyroots
 *   base 50, stages 4
 *   job 50  initialize
 *   job 51  compute
 *   job 52  retrieve
 *   job 53  output size
 */

int32_t gate_init(void);
int32_t gate_final(void);
int32_t gate_call(int32_t job, int32_t size, int32_t *data, int32_t verbose);

#ifdef __cplusplus
}
#endif

#endif /* JOBGATE_H */
