//! Shared golden-invocation table for the command-line interface: exact
//! expected stdout bytes and exit codes.

use std::process::Command;

pub struct Golden {
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// Value for the SYMF_DEGREE_CAP environment variable, if set.
    pub env_cap: Option<&'static str>,
    pub stdout: &'static str,
    pub exit: i32,
}

pub const GOLDENS: &[Golden] = &[
    Golden {
        name: "eval_lambda3_h1_in_e",
        args: &["eval", "lambda(3, h[1])", "--basis", "e"],
        env_cap: None,
        stdout: "e[3]\n",
        exit: 0,
    },
    Golden {
        name: "eval_tensor_square_split",
        args: &["eval", "h[1]^2 - h[2]", "--basis", "e"],
        env_cap: None,
        stdout: "e[2]\n",
        exit: 0,
    },
    Golden {
        name: "eval_constant",
        args: &["eval", "5"],
        env_cap: None,
        stdout: "5\n",
        exit: 0,
    },
    Golden {
        name: "eval_mixed_expression_json",
        args: &["eval", "e[2]*h[1] - p[3]", "--json"],
        env_cap: None,
        stdout: "{\"basis\":\"m\",\"terms\":[{\"partition\":[3],\"num\":\"-1\",\"den\":\"1\"},{\"partition\":[2,1],\"num\":\"1\",\"den\":\"1\"},{\"partition\":[1,1,1],\"num\":\"3\",\"den\":\"1\"}]}\n",
        exit: 0,
    },
    Golden {
        name: "eval_trailing_comma_is_parse_error",
        args: &["eval", "e[2,]"],
        env_cap: None,
        stdout: "",
        exit: 2,
    },
    Golden {
        name: "eval_unbalanced_paren_is_parse_error",
        args: &["eval", "(e[2]"],
        env_cap: None,
        stdout: "",
        exit: 2,
    },
    Golden {
        name: "eval_degree_cap_flag",
        args: &["eval", "p[2]", "--cap", "1"],
        env_cap: None,
        stdout: "",
        exit: 4,
    },
    Golden {
        name: "eval_degree_cap_env",
        args: &["eval", "p[2]"],
        env_cap: Some("1"),
        stdout: "",
        exit: 4,
    },
    Golden {
        name: "eval_unknown_basis",
        args: &["eval", "h[2]", "--basis", "q"],
        env_cap: None,
        stdout: "",
        exit: 3,
    },
    Golden {
        name: "convert_p2_to_h_json",
        args: &["convert", "p[2]", "--basis", "h", "--json"],
        env_cap: None,
        stdout: "{\"basis\":\"h\",\"terms\":[{\"partition\":[2],\"num\":\"2\",\"den\":\"1\"},{\"partition\":[1,1],\"num\":\"-1\",\"den\":\"1\"}]}\n",
        exit: 0,
    },
    Golden {
        name: "convert_s21_to_h",
        args: &["convert", "s[2,1]", "--basis", "h"],
        env_cap: None,
        stdout: "-h[3] + h[2,1]\n",
        exit: 0,
    },
    Golden {
        name: "expand_s21_two_vars_json",
        args: &["expand", "s[2,1]", "-N", "2", "--json"],
        env_cap: None,
        stdout: "{\"nvars\":2,\"terms\":[{\"exps\":[2,1],\"coeff\":\"1\"},{\"exps\":[1,2],\"coeff\":\"1\"}]}\n",
        exit: 0,
    },
    Golden {
        name: "expand_e3_two_vars_vanishes",
        args: &["expand", "e[3]", "-N", "2"],
        env_cap: None,
        stdout: "0\n",
        exit: 0,
    },
    Golden {
        name: "expand_power_sum",
        args: &["expand", "p[2]", "-N", "3"],
        env_cap: None,
        stdout: "x1^2 + x2^2 + x3^2\n",
        exit: 0,
    },
    Golden {
        name: "truncate_e2_to_one_var",
        args: &["truncate", "e[2]", "-N", "2", "-n", "1"],
        env_cap: None,
        stdout: "0\n",
        exit: 0,
    },
    Golden {
        name: "truncate_h2_json",
        args: &["truncate", "h[2]", "-N", "3", "-n", "2", "--json"],
        env_cap: None,
        stdout: "{\"nvars\":2,\"terms\":[{\"exps\":[2,0],\"coeff\":\"1\"},{\"exps\":[1,1],\"coeff\":\"1\"},{\"exps\":[0,2],\"coeff\":\"1\"}]}\n",
        exit: 0,
    },
    Golden {
        name: "truncate_requires_fewer_vars",
        args: &["truncate", "h[2]", "-N", "2", "-n", "2"],
        env_cap: None,
        stdout: "",
        exit: 3,
    },
    Golden {
        name: "collect_e2_image",
        args: &["collect", "{\"nvars\":2,\"terms\":[{\"exps\":[1,1],\"coeff\":\"1\"}]}"],
        env_cap: None,
        stdout: "m[1,1]\n",
        exit: 0,
    },
    Golden {
        name: "collect_rejects_asymmetric",
        args: &["collect", "{\"nvars\":2,\"terms\":[{\"exps\":[2,0],\"coeff\":\"1\"}]}"],
        env_cap: None,
        stdout: "",
        exit: 3,
    },
    Golden {
        name: "chartable_s3_human",
        args: &["chartable", "-n", "3"],
        env_cap: None,
        stdout: "classes: [3] [2,1] [1,1,1]\nchi[3]: 1 1 1\nchi[2,1]: -1 0 2\nchi[1,1,1]: 1 -1 1\n",
        exit: 0,
    },
    Golden {
        name: "chartable_s3_json",
        args: &["chartable", "-n", "3", "--json"],
        env_cap: None,
        stdout: "[{\"partition\":[3],\"character\":{\"n\":3,\"values\":[{\"class\":[3],\"num\":\"1\",\"den\":\"1\"},{\"class\":[2,1],\"num\":\"1\",\"den\":\"1\"},{\"class\":[1,1,1],\"num\":\"1\",\"den\":\"1\"}]}},{\"partition\":[2,1],\"character\":{\"n\":3,\"values\":[{\"class\":[3],\"num\":\"-1\",\"den\":\"1\"},{\"class\":[2,1],\"num\":\"0\",\"den\":\"1\"},{\"class\":[1,1,1],\"num\":\"2\",\"den\":\"1\"}]}},{\"partition\":[1,1,1],\"character\":{\"n\":3,\"values\":[{\"class\":[3],\"num\":\"1\",\"den\":\"1\"},{\"class\":[2,1],\"num\":\"-1\",\"den\":\"1\"},{\"class\":[1,1,1],\"num\":\"1\",\"den\":\"1\"}]}}]\n",
        exit: 0,
    },
    Golden {
        name: "ch_of_irreducible_is_schur",
        args: &["ch", "[2,1]"],
        env_cap: None,
        stdout: "s[2,1]\n",
        exit: 0,
    },
    Golden {
        name: "ch_in_m_basis_json",
        args: &["ch", "[2,1]", "--basis", "m", "--json"],
        env_cap: None,
        stdout: "{\"basis\":\"m\",\"terms\":[{\"partition\":[2,1],\"num\":\"1\",\"den\":\"1\"},{\"partition\":[1,1,1],\"num\":\"2\",\"den\":\"1\"}]}\n",
        exit: 0,
    },
    Golden {
        name: "decompose_regular_cube_json",
        args: &["decompose", "h[1]^3", "--json"],
        env_cap: None,
        stdout: "{\"terms\":[{\"partition\":[3],\"mult\":\"1\"},{\"partition\":[2,1],\"mult\":\"2\"},{\"partition\":[1,1,1],\"mult\":\"1\"}]}\n",
        exit: 0,
    },
    Golden {
        name: "decompose_requires_homogeneous",
        args: &["decompose", "h[1] + h[2]"],
        env_cap: None,
        stdout: "",
        exit: 3,
    },
    Golden {
        name: "omega_swaps_e_and_h",
        args: &["omega", "e[2,1]", "--basis", "h"],
        env_cap: None,
        stdout: "h[2,1]\n",
        exit: 0,
    },
    Golden {
        name: "verify_schur_weyl_2_2_json",
        args: &["verify", "schur-weyl", "-N", "2", "-n", "2", "--json"],
        env_cap: None,
        stdout: "{\"N\":2,\"n\":2,\"dimension\":2,\"is_isomorphism\":true,\"permutation_image_dimension\":2}\n",
        exit: 0,
    },
    Golden {
        name: "verify_schur_weyl_2_3_human",
        args: &["verify", "schur-weyl", "-N", "2", "-n", "3"],
        env_cap: None,
        stdout: "N = 2, n = 3\ndimension = 5\npermutation_image_dimension = 5\nis_isomorphism = false\nverified: dimension matches character-theory prediction (5)\n",
        exit: 0,
    },
    Golden {
        name: "verify_schur_weyl_size_cap",
        args: &["verify", "schur-weyl", "-N", "4", "-n", "5"],
        env_cap: None,
        stdout: "",
        exit: 4,
    },
    Golden {
        name: "verify_splitting_json",
        args: &["verify", "splitting", "-n", "3", "--json"],
        env_cap: None,
        stdout: "{\"degree\":3,\"nvars\":3,\"pass\":true,\"collisions\":[],\"vanishing_failures\":[]}\n",
        exit: 0,
    },
    Golden {
        name: "verify_splitting_one_var_fails",
        args: &["verify", "splitting", "-n", "3", "-N", "1"],
        env_cap: None,
        stdout: "degree = 3, nvars = 1\ncollision: s[1,1] = 0\ncollision: s[2,1] = 0\ncollision: s[1,1,1] = 0\nFAILED\n",
        exit: 1,
    },
    Golden {
        name: "verify_lambda_axioms_json",
        args: &["verify", "lambda-axioms", "--json"],
        env_cap: None,
        stdout: "{\"pass\":true}\n",
        exit: 0,
    },
    Golden {
        name: "verify_omega_duality_json",
        args: &["verify", "omega-duality", "--json"],
        env_cap: None,
        stdout: "{\"pass\":true}\n",
        exit: 0,
    },
    Golden {
        name: "verify_frobenius_json",
        args: &["verify", "frobenius", "--json"],
        env_cap: None,
        stdout: "{\"pass\":true}\n",
        exit: 0,
    },
    Golden {
        name: "unknown_flag_is_invalid_args",
        args: &["eval", "h[1]", "--frobnicate"],
        env_cap: None,
        stdout: "",
        exit: 3,
    },
];

pub fn run_golden(case: &Golden) -> (String, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symf"));
    cmd.args(case.args);
    cmd.env_remove("SYMF_DEGREE_CAP");
    if let Some(cap) = case.env_cap {
        cmd.env("SYMF_DEGREE_CAP", cap);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let code = out.status.code().expect("no signal");
    (stdout, code)
}
