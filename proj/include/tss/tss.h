// Copyright 2026 The tss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the tss time-series simplification library.
 *
 * Every function returns a tss_status. On failure the message of the most
 * recent error on the calling thread is available from tss_last_error().
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned through char** are owned by the caller and released with
 * tss_string_free().
 */
#ifndef TSS_TSS_H_
#define TSS_TSS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TSS_API __declspec(dllexport)
#else
#define TSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tss_status {
  TSS_OK = 0,
  TSS_ERR_INVALID_ARGUMENT = 1, /* null handle, out-of-range parameter */
  TSS_ERR_PARSE = 2,
  TSS_ERR_FORMAT = 3,
  TSS_ERR_CONFIG = 4,
  TSS_ERR_LOOKUP = 5,
  TSS_ERR_IO = 6,
  TSS_ERR_INTERNAL = 7
} tss_status;

typedef enum tss_algorithm { TSS_RDP = 0, TSS_VW = 1, TSS_BU = 2, TSS_OS = 3 } tss_algorithm;

typedef enum tss_split { TSS_SPLIT_TRAIN = 0, TSS_SPLIT_TEST = 1 } tss_split;

typedef struct tss_dataset tss_dataset;
typedef struct tss_simplification tss_simplification;
typedef struct tss_classifier tss_classifier;
typedef struct tss_curve tss_curve;

TSS_API const char* tss_version(void);
TSS_API const char* tss_last_error(void);
TSS_API const char* tss_status_string(tss_status status);
TSS_API void tss_string_free(char* s);

/* Parses "rdp", "vw", "bu" or "os" (case-insensitive). */
TSS_API tss_status tss_algorithm_parse(const char* name, tss_algorithm* out);
TSS_API const char* tss_algorithm_name(tss_algorithm alg);

/* ---- datasets --------------------------------------------------------- */

/* Loads <data_dir>/<name>_TRAIN.tsv and _TEST.tsv, z-normalising each series. */
TSS_API tss_status tss_dataset_load(const char* data_dir, const char* name, tss_dataset** out);
TSS_API void tss_dataset_free(tss_dataset* d);
TSS_API size_t tss_dataset_series_length(const tss_dataset* d);
TSS_API size_t tss_dataset_num_classes(const tss_dataset* d);
TSS_API size_t tss_dataset_split_size(const tss_dataset* d, tss_split split);
/* Borrowed view of one instance; valid while the dataset lives. */
TSS_API tss_status tss_dataset_instance(const tss_dataset* d, tss_split split, size_t index, const double** values,
                                        size_t* length, int* label);

/* Newline-separated dataset names selected by `selector` ("all" applies the
 * max_length filter). */
TSS_API tss_status tss_select_datasets(const char* data_dir, const char* selector, size_t max_length, char** out);

/* ---- simplification --------------------------------------------------- */

TSS_API tss_status tss_simplify(tss_algorithm alg, const double* values, size_t length, double alpha_c,
                                tss_simplification** out);
/* Runs an algorithm with its raw threshold (epsilon, area, error or alpha). */
TSS_API tss_status tss_simplify_raw(tss_algorithm alg, const double* values, size_t length, double raw,
                                    tss_simplification** out);
TSS_API tss_status tss_normalize_param(tss_algorithm alg, const double* values, size_t length, double alpha_c,
                                       double* raw);
TSS_API void tss_simplification_free(tss_simplification* s);
TSS_API size_t tss_simplification_kept_count(const tss_simplification* s);
TSS_API size_t tss_simplification_segment_count(const tss_simplification* s);
/* Borrowed arrays of kept_count entries. */
TSS_API tss_status tss_simplification_kept(const tss_simplification* s, const size_t** indices, const double** values);
/* Writes `length` reconstructed values; length must equal the original length. */
TSS_API tss_status tss_simplification_reconstruct(const tss_simplification* s, double* out, size_t length);
TSS_API tss_status tss_simplification_json(const tss_simplification* s, char** out);

/* ---- classifiers ------------------------------------------------------ */

/* spec: "logreg", "knn", "knn:dtw", "knn:euclidean" or "external:<csv path>".
 * Trains on the dataset's train split. */
TSS_API tss_status tss_classifier_create(const tss_dataset* d, const char* spec, uint64_t seed, tss_classifier** out);
TSS_API void tss_classifier_free(tss_classifier* c);
/* `dataset`/`variant` may be NULL for built-in classifiers. */
TSS_API tss_status tss_classifier_predict(const tss_classifier* c, const double* values, size_t length,
                                          const char* dataset, size_t instance_id, const char* variant, int* label);
TSS_API tss_status tss_dtw_distance(const double* a, size_t na, const double* b, size_t nb, double* out);

/* ---- evaluation ------------------------------------------------------- */

typedef struct tss_curve_point {
  double alpha_c;
  double mean_complexity;
  double loyalty;
  double kappa;
  double mean_segments;
} tss_curve_point;

/* Row-major k x k counts: rows are labels of originals, columns of simplifications. */
TSS_API tss_status tss_cohen_kappa(const int64_t* counts, size_t classes, double* out);

/* Stratified sample of `sample_size` instances of `split`, swept over the
 * 101-step alpha_c grid. */
TSS_API tss_status tss_sweep(const tss_dataset* d, tss_algorithm alg, const tss_classifier* c, tss_split split,
                             size_t sample_size, uint64_t seed, size_t jobs, tss_curve** out);
TSS_API void tss_curve_free(tss_curve* c);
TSS_API size_t tss_curve_size(const tss_curve* c);
TSS_API tss_status tss_curve_point_at(const tss_curve* c, size_t index, tss_curve_point* out);
TSS_API double tss_curve_auc(const tss_curve* c);
TSS_API double tss_curve_complexity_at_loyalty(const tss_curve* c, double target);
TSS_API tss_status tss_curve_min_alpha_for_loyalty(const tss_curve* c, double target, double* alpha_c);
TSS_API tss_status tss_curve_csv(const tss_curve* c, char** out);

typedef struct tss_evaluate_options {
  const char* data_dir;
  const char* dataset;       /* name or "all" */
  size_t max_length;         /* 0 means 200 */
  const char* algorithms;    /* comma-separated, or "all" */
  const char* classifier;    /* see tss_classifier_create */
  uint64_t seed;
  size_t sample_size;        /* 0 means 100 */
  tss_split split;
  const char* out_dir;
  size_t jobs;               /* 0 means 1 */
  int verbose;               /* progress lines on stderr */
} tss_evaluate_options;

TSS_API void tss_evaluate_options_init(tss_evaluate_options* o);
TSS_API tss_status tss_run_evaluate(const tss_evaluate_options* o);

/* CSV: name,stationary_fraction,stationarity,seasonal_fraction,seasonal,mean_entropy,entropy_bin */
TSS_API tss_status tss_run_characterize(const char* data_dir, const char* selector, size_t max_length, size_t jobs,
                                        char** csv);

/* ---- prototypes ------------------------------------------------------- */

/* JSON {dataset,k,metric,split,classes:[{label,raw_label,instance_ids}]}.
 * metric: "dtw" or "euclidean". */
TSS_API tss_status tss_prototypes(const tss_dataset* d, size_t k, const char* metric, uint64_t seed, size_t jobs,
                                  char** json);

typedef struct tss_bundle_options {
  tss_algorithm algorithm;
  double alpha_c;
  size_t test_count;
  size_t batch;
  size_t k_per_class;
  const char* metric;
  uint64_t seed;
  size_t jobs;
} tss_bundle_options;

TSS_API void tss_bundle_options_init(tss_bundle_options* o);
TSS_API tss_status tss_export_bundle(const tss_dataset* d, const tss_classifier* c, const tss_bundle_options* o,
                                     const char* out_dir);

/* ---- server ----------------------------------------------------------- */

/* Blocks serving HTTP until the process ends. static_dir may be NULL. */
TSS_API tss_status tss_serve(const char* data_dir, const char* host, int port, size_t jobs, const char* static_dir);

#ifdef __cplusplus
}
#endif

#endif /* TSS_TSS_H_ */
