#include <stdio.h>
#include <string.h>

#include "orbigreen.h"

#define CHECK(cond)                                               \
    do {                                                          \
        if (!(cond)) {                                            \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                             \
        }                                                         \
    } while (0)

int main(void) {
    OgSeed *seed = NULL;
    OgSequence *seq = NULL;
    int outcome = -1;
    size_t step = 0, len = 0;
    char name[16];
    bool fin = false;

    CHECK(og_seed_build(1, 2, 1, &seed) == OG_OK);
    CHECK(og_delta(1, 2, 1, false, &seq) == OG_OK);
    CHECK(og_sequence_len(seq, &len) == OG_OK && len == 22);
    CHECK(og_sequence_label(seq, 4, name, sizeof name, NULL) == OG_OK);
    CHECK(strcmp(name, "g_1") == 0);
    CHECK(og_seed_apply(seed, seq, &outcome, &step) == OG_OK);
    CHECK(outcome == OG_OUTCOME_VALID);
    CHECK(og_seed_is_final(seed, &fin) == OG_OK && fin);
    og_sequence_free(seq);
    og_seed_free(seed);

    CHECK(og_seed_build(0, 1, 4, &seed) == OG_ERR_UNSUPPORTED);
    CHECK(strncmp(og_last_error(), "PunctureOne", 11) == 0);

    CHECK(og_verify_mgs(0, 2, 3, &outcome, &step) == OG_OK);
    CHECK(outcome == OG_OUTCOME_NOT_GREEN && step == 11);
    printf("ok\n");
    return 0;
}
