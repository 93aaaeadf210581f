#ifndef CRNKIT_H
#define CRNKIT_H

/* C interface to the crnkit reaction-network analysis library.
 *
 * All functions returning crn_status follow the same contract: CRN_OK on
 * success; otherwise *errmsg (when non-NULL) receives a malloc'd description
 * the caller frees with crn_string_free. String outputs (*out) are likewise
 * malloc'd and owned by the caller.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct crn_network crn_network;

typedef enum crn_status {
    CRN_OK = 0,
    CRN_ERR_ANALYSIS = 1, /* an analysis refused (assumption violated)       */
    CRN_ERR_PARSE = 2,    /* malformed model text or unreadable file         */
    CRN_ERR_INVALID = 3,  /* bad arguments (NULL handle, malformed request)  */
} crn_status;

/* Library version string, owned by the library. */
const char* crn_version(void);

/* Frees any string returned through a char** out-parameter. NULL is fine. */
void crn_string_free(char* s);

/* Shifts the deterministic sampling sequences (rate checks, equilibrium
 * multistarts) so diagnostics can be re-rolled; 0 restores the default. */
void crn_set_seed(long seed);

/* --- model handling ----------------------------------------------------- */

crn_status crn_parse(const char* text, crn_network** out, char** errmsg);
crn_status crn_parse_file(const char* path, crn_network** out, char** errmsg);
void crn_network_free(crn_network* net);

/* Round-trippable model text. */
crn_status crn_network_serialize(const crn_network* net, char** out, char** errmsg);

/* Embedded example models. */
crn_status crn_fixture(const char* name, char** out_text, char** errmsg);
crn_status crn_fixture_list_json(char** out, char** errmsg);

/* --- analyses ----------------------------------------------------------- */
/* JSON inputs: params_json is an object {"name": value, ...} assigning every
 * parameter; point_json/x0_json are either an array over species in network
 * order or an object {"species": value, ...}; tol_json is an optional object
 * overriding tolerance fields by name (NULL keeps defaults); face_csv is a
 * comma-separated species list (NULL sweeps all faces); rule is "net" or
 * "touch"; classifier is "lcp" or "generic". */

crn_status crn_network_json(const crn_network* net, char** out, char** errmsg);

crn_status crn_siphons_json(const crn_network* net, int with_certificates, int max_core_size,
                            char** out, char** errmsg);

crn_status crn_igms_json(const crn_network* net, const char* rule, char** out, char** errmsg);
crn_status crn_igms_dot(const crn_network* net, const char* rule, char** out, char** errmsg);

crn_status crn_ngm_json(const crn_network* net, const char* params_json, const char* point_json,
                        int use_kd, const char* tol_json, char** out, char** errmsg);

crn_status crn_boundary_json(const crn_network* net, const char* params_json,
                             const char* face_csv, const char* tol_json, char** out,
                             char** errmsg);

crn_status crn_invade_json(const crn_network* net, const char* params_json,
                           const char* tol_json, char** out, char** errmsg);
crn_status crn_invade_dot(const crn_network* net, const char* params_json,
                          const char* tol_json, char** out, char** errmsg);

/* CSV when as_json is 0, JSON otherwise. rtol/atol/n_out <= 0 pick defaults. */
crn_status crn_simulate(const crn_network* net, const char* params_json, const char* x0_json,
                        double t_end, double rtol, double atol, int n_out, int as_json,
                        char** out, char** errmsg);

/* Axis spec: "name:lo:hi:n". */
crn_status crn_scan(const crn_network* net, const char* params_json, const char* axis1,
                    const char* axis2, const char* classifier, const char* tol_json,
                    int as_json, char** out, char** errmsg);

crn_status crn_report_json(const crn_network* net, const char* params_json,
                           const char* tol_json, char** out, char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* CRNKIT_H */
