#include <stdio.h>
#include <string.h>

#include "jobgate.h"

int main(int argc, char **argv) {
  const char *word = argc > 1 ? argv[1] : "hello";
  int32_t data[256];
  int32_t size = (int32_t)strlen(word);
  int32_t fail = 0;
  char out[257];

  if (size > 256) {
    fprintf(stderr, "swap_demo: word longer than 256 characters\n");
    return 1;
  }
  for (int32_t idx = 0; idx < size; idx++) data[idx] = (int32_t)(unsigned char)word[idx];

  gate_init();
  fail = gate_call(0, size, data, 1);
  if (fail == 0) fail = gate_call(1, size, data, 1);
  if (fail == 0) fail = gate_call(2, size, data, 1);
  gate_final();

  if (fail != 0) {
    fprintf(stderr, "swap_demo: gate_call returned %d\n", (int)fail);
    return 1;
  }
  for (int32_t idx = 0; idx < size; idx++) out[idx] = (char)data[idx];
  out[size] = '\0';
  printf("%s\n", out);
  return 0;
}
