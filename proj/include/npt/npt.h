/* npt — closed-form nonparanormal transport distances between empirical
 * multivariate distributions, with Wasserstein-family baselines, a
 * nonparanormal sampler, and classical MDS.
 *
 * C interface of the shared library. All state lives behind opaque handles;
 * every fallible call returns an npt_status and leaves a human-readable
 * message in npt_last_error() (thread-local). Handles returned through an
 * out-parameter are owned by the caller and released with the matching
 * *_free function. Passing NULL to a *_free is a no-op.
 */
#ifndef NPT_NPT_H
#define NPT_NPT_H

#include <stddef.h>

#if defined(_WIN32)
#define NPT_API __declspec(dllexport)
#else
#define NPT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Nonzero values double as CLI exit codes. */
typedef enum npt_status {
  NPT_OK = 0,
  NPT_ERROR_VALIDATION = 2, /* bad inputs, broken preconditions */
  NPT_ERROR_NUMERIC = 3,    /* numerical failure (eigensolver, instability) */
  NPT_ERROR_IO = 4          /* file system / parse failures */
} npt_status;

typedef struct npt_collection npt_collection;
typedef struct npt_signature_set npt_signature_set;
typedef struct npt_matrix npt_matrix;
typedef struct npt_embedding npt_embedding;

NPT_API const char* npt_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
NPT_API const char* npt_last_error(void);

/* ------------------------------------------------------------------ */
/* Collections: groups of empirical distributions sharing a dimension. */

/* Long-format CSV: header row, one id column, remaining columns are numeric
 * coordinates. id_column may be NULL: a column named "id" is used if present,
 * else the first column. */
NPT_API npt_status npt_collection_load_csv(const char* path,
                                           const char* id_column,
                                           npt_collection** out);

/* Nonparanormal simulation over a (rho, lambda) grid. Latent correlation is
 * Toeplitz rho^|j-k|; marginals go through the fixed increasing mixture
 * transform indexed by lambda. One distribution per grid cell, seeded as
 * seed + cell index. */
typedef struct npt_grid_spec {
  double rho_min;
  double rho_max;
  int rho_count;
  double lambda_min;
  double lambda_max;
  int lambda_count;
  int samples_per_distribution;
  int dimension;
  unsigned long long seed;
} npt_grid_spec;

NPT_API npt_status npt_simulate_grid(const npt_grid_spec* spec,
                                     npt_collection** out);

/* Writes id,rho,lambda rows for the grid's cells (covariate sidecar). */
NPT_API npt_status npt_grid_covariates_write_csv(const npt_grid_spec* spec,
                                                 const char* path);

/* Pooled per-dimension standardization: median center, sample-sd scale. */
NPT_API npt_status npt_collection_standardize(const npt_collection* in,
                                              npt_collection** out);

NPT_API npt_status npt_collection_write_csv(const npt_collection* c,
                                            const char* path);

NPT_API size_t npt_collection_count(const npt_collection* c);
NPT_API size_t npt_collection_dimension(const npt_collection* c);
NPT_API const char* npt_collection_id(const npt_collection* c, size_t i);
NPT_API size_t npt_collection_sample_count(const npt_collection* c, size_t i);
NPT_API int npt_collection_is_standardized(const npt_collection* c);
NPT_API void npt_collection_free(npt_collection* c);

/* ------------------------------------------------------------------ */
/* Signatures: per-distribution quantile vectors + latent correlation,
 * the reusable precompute behind the NPT metric. */

NPT_API npt_status npt_signatures_compute(const npt_collection* c,
                                          size_t quantile_count,
                                          int workers,
                                          npt_signature_set** out);

NPT_API size_t npt_signatures_count(const npt_signature_set* s);
NPT_API size_t npt_signatures_quantile_count(const npt_signature_set* s);
NPT_API size_t npt_signatures_dimension(const npt_signature_set* s);
NPT_API double npt_signatures_elapsed_ms(const npt_signature_set* s);

/* Cache formats: a single JSON document, or a CSV bundle (a directory with
 * grid.csv, quantiles.csv, latent.csv). */
NPT_API npt_status npt_signatures_write_json(const npt_signature_set* s,
                                             const char* path);
NPT_API npt_status npt_signatures_read_json(const char* path,
                                            npt_signature_set** out);
NPT_API npt_status npt_signatures_write_csv(const npt_signature_set* s,
                                            const char* directory);
NPT_API npt_status npt_signatures_read_csv(const char* directory,
                                           npt_signature_set** out);
NPT_API void npt_signatures_free(npt_signature_set* s);

/* ------------------------------------------------------------------ */
/* Distance matrices (squared distances, symmetric, zero diagonal).
 *
 * metric_spec grammar:
 *   "npt"                      closed-form nonparanormal transport
 *   "exact"                    assignment-based optimal transport
 *   "sliced[:L=<int>]"         sliced Wasserstein, default L=10
 *   "sinkhorn[:eps=<x>[,iters=<n>][,tol=<x>]]"  entropic OT, default eps=1
 *
 * For "npt", signatures may be passed to skip the precompute phase; they
 * must come from the same collection. Other metrics ignore them.
 * quantile_count is used when signatures are not supplied. seed drives
 * sliced projections. */
NPT_API npt_status npt_matrix_compute(const npt_collection* c,
                                      const npt_signature_set* signatures,
                                      const char* metric_spec,
                                      size_t quantile_count,
                                      int workers,
                                      unsigned long long seed,
                                      npt_matrix** out);

/* One pairwise squared distance straight from raw samples (includes any
 * per-pair precompute; used for single-distance benchmarking). */
NPT_API npt_status npt_pair_distance(const npt_collection* c,
                                     size_t i,
                                     size_t j,
                                     const char* metric_spec,
                                     size_t quantile_count,
                                     unsigned long long seed,
                                     double* out);

NPT_API size_t npt_matrix_size(const npt_matrix* m);
NPT_API const char* npt_matrix_label(const npt_matrix* m, size_t i);
NPT_API double npt_matrix_value(const npt_matrix* m, size_t i, size_t j);
NPT_API const char* npt_matrix_metric(const npt_matrix* m);
/* Pairwise-assembly wall time (phase 2). */
NPT_API double npt_matrix_elapsed_ms(const npt_matrix* m);
/* Signature precompute wall time (phase 1; 0 for baseline metrics). */
NPT_API double npt_matrix_precompute_ms(const npt_matrix* m);

NPT_API npt_status npt_matrix_write_csv(const npt_matrix* m, const char* path);
NPT_API npt_status npt_matrix_read_csv(const char* path, npt_matrix** out);
NPT_API void npt_matrix_free(npt_matrix* m);

/* ------------------------------------------------------------------ */
/* Classical MDS on a squared-distance matrix. */

NPT_API npt_status npt_mds_compute(const npt_matrix* m,
                                   size_t r,
                                   npt_embedding** out);

NPT_API size_t npt_embedding_count(const npt_embedding* e);
NPT_API size_t npt_embedding_dimension(const npt_embedding* e);
NPT_API const char* npt_embedding_label(const npt_embedding* e, size_t i);
NPT_API double npt_embedding_coordinate(const npt_embedding* e, size_t i,
                                        size_t k);
NPT_API double npt_embedding_eigenvalue(const npt_embedding* e, size_t k);
/* Number of retained eigenvalues clipped at zero, and the fraction of total
 * spectral mass that was negative (diagnostics for non-Euclidean input). */
NPT_API size_t npt_embedding_clipped_count(const npt_embedding* e);
NPT_API double npt_embedding_negative_mass(const npt_embedding* e);

/* Writes id,coord_1..coord_r. covariates_csv (optional, may be NULL) is
 * left-joined on id; join misses produce stderr warnings + empty cells. */
NPT_API npt_status npt_embedding_write_csv(const npt_embedding* e,
                                           const char* path,
                                           const char* covariates_csv);

/* Relative Frobenius residual after centering + orthogonal alignment. */
NPT_API npt_status npt_procrustes_residual(const npt_embedding* a,
                                           const npt_embedding* b,
                                           double* out);
NPT_API void npt_embedding_free(npt_embedding* e);

/* ------------------------------------------------------------------ */
/* Concordance statistics over plain arrays (report plumbing). */

NPT_API npt_status npt_pearson(const double* x, const double* y, size_t n,
                               double* out);
NPT_API npt_status npt_spearman(const double* x, const double* y, size_t n,
                                double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NPT_NPT_H */
