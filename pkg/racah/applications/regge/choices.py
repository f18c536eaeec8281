from racah import translates as _

R1, R2, R3, R4, R5 = 1, 2, 3, 4, 5

REGGE_TRANSFORMS = (R1, R2, R3, R4, R5)
# Each R_kappa below 4 fixes column kappa
COLUMN_TRANSFORMS = (R1, R2, R3)

KIND_CLASSICAL = 'classical'
KIND_SUPER = 'super'
KIND_FLAT = 'flat'

KIND = (
    (KIND_CLASSICAL, _.kind_classical),
    (KIND_SUPER, _.kind_super),
    (KIND_FLAT, _.kind_flat),
)
